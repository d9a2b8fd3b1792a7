#include "cpt/z2_index.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cpt/verification.hpp"

namespace cpt {

namespace {

std::string describe(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

Simplex image(const Simplex& s, const std::vector<VertexId>& involution)
{
    std::vector<VertexId> v;
    v.reserve(s.size());
    for (VertexId x : s.vertices())
        v.push_back(involution[x]);
    return Simplex(std::move(v));
}

void build_positions(QuotientData& q)
{
    q.position.assign(q.simplices.size(), {});
    for (std::size_t k = 0; k < q.simplices.size(); ++k)
        for (std::size_t i = 0; i < q.simplices[k].size(); ++i)
            q.position[k].emplace(q.simplices[k][i], i);
}

// Quotient simplices of every dimension from the cover, checking that the
// quotient is an honest simplicial complex: no simplex collapses and every
// image has exactly the two cover simplices of one orbit above it.
void project(QuotientData& q)
{
    const auto cover_by_dim = q.cover.complex.simplices_by_dim();
    q.simplices.clear();
    for (const auto& layer : cover_by_dim)
    {
        std::set<Simplex> images;
        for (const auto& s : layer)
        {
            std::vector<VertexId> v;
            for (VertexId x : s.vertices())
                v.push_back(q.orbit[x]);
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end())
                throw std::logic_error("quotient: a simplex meets one orbit twice");
            images.insert(Simplex(std::move(v)));
        }
        if (2 * images.size() != layer.size())
            throw std::logic_error("quotient: subdivided action does not give a simplicial quotient");
        q.simplices.emplace_back(images.begin(), images.end());
    }
    std::vector<Simplex> all;
    for (const auto& layer : q.simplices)
        all.insert(all.end(), layer.begin(), layer.end());
    q.complex = SimplicialComplex(std::move(all));
    build_positions(q);

    q.cover_edges.clear();
    if (cover_by_dim.size() > 1)
        q.cover_edges.insert(cover_by_dim[1].begin(), cover_by_dim[1].end());
}

}   // namespace

FixedSimplexError::FixedSimplexError(const Simplex& s)
    : std::domain_error("fixed simplex found: " + describe(s) + " is mapped onto itself, so the index is infinite"),
      simplex_(s)
{
}

void validate(const Z2Complex& X)
{
    const std::size_t n = X.involution.size();
    const auto vertices = X.complex.vertices();
    if (vertices.size() != n || (n > 0 && vertices.back() != static_cast<VertexId>(n - 1)))
        throw std::invalid_argument("Z2Complex: vertices must be exactly 0..N-1 with one involution entry each");
    for (std::size_t v = 0; v < n; ++v)
    {
        const VertexId w = X.involution[v];
        if (w < 0 || static_cast<std::size_t>(w) >= n || X.involution[w] != static_cast<VertexId>(v))
            throw std::invalid_argument("Z2Complex: involution is not of order two");
    }
    for (const auto& f : X.complex.facets())
        if (!X.complex.contains(image(f, X.involution)))
            throw std::invalid_argument("Z2Complex: involution does not map simplices to simplices");
    for (const auto& f : X.complex.facets())
        for (const auto& s : f.all_faces())
            if (image(s, X.involution) == s)
                throw FixedSimplexError(s);
}

Z2Complex cross_polytope_sphere(int m)
{
    if (m < 0)
        throw std::invalid_argument("cross_polytope_sphere: negative dimension");
    Z2Complex X;
    std::vector<Simplex> facets;
    for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask)
    {
        std::vector<VertexId> v;
        for (int i = 0; i <= m; ++i)
            v.push_back(2 * i + static_cast<int>((mask >> i) & 1u));
        facets.push_back(Simplex(std::move(v)));
    }
    X.complex = SimplicialComplex(std::move(facets));
    for (int i = 0; i <= m; ++i)
    {
        X.involution.push_back(2 * i + 1);
        X.involution.push_back(2 * i);
    }
    return X;
}

Z2Complex subdivide(const Z2Complex& X)
{
    validate(X);
    const BarycentricComplex sd = barycentric_subdivision(X.complex);
    Z2Complex Y;
    Y.complex = sd.complex;
    for (const auto& tag : sd.tags)
        Y.involution.push_back(sd.id_of(image(tag, X.involution)));
    return Y;
}

Z2Complex invariant_subcomplex(const Z2Complex& X, const std::vector<Simplex>& generators)
{
    validate(X);
    std::vector<Simplex> facets;
    std::set<VertexId> used;
    for (const auto& g : generators)
    {
        if (!X.complex.contains(g))
            throw std::invalid_argument("invariant_subcomplex: generator " + describe(g) + " is not a simplex");
        for (const auto& s : {g, image(g, X.involution)})
        {
            facets.push_back(s);
            used.insert(s.vertices().begin(), s.vertices().end());
        }
    }
    std::map<VertexId, VertexId> rename;
    for (VertexId v : used)
        rename.emplace(v, static_cast<VertexId>(rename.size()));

    Z2Complex Y;
    for (auto& f : facets)
    {
        std::vector<VertexId> v;
        for (VertexId x : f.vertices())
            v.push_back(rename.at(x));
        f = Simplex(std::move(v));
    }
    Y.complex = SimplicialComplex(std::move(facets));
    for (VertexId v : used)
        Y.involution.push_back(rename.at(X.involution[v]));
    return Y;
}

Z2Complex disjoint_union(const std::vector<Z2Complex>& parts)
{
    Z2Complex U;
    std::vector<Simplex> facets;
    int offset = 0;
    for (const auto& part : parts)
    {
        for (const auto& f : part.complex.facets())
        {
            std::vector<VertexId> v;
            for (VertexId x : f.vertices())
                v.push_back(x + offset);
            facets.push_back(Simplex(std::move(v)));
        }
        for (VertexId w : part.involution)
            U.involution.push_back(w + offset);
        offset += static_cast<int>(part.involution.size());
    }
    U.complex = SimplicialComplex(std::move(facets));
    return U;
}

QuotientData quotient(const Z2Complex& X)
{
    validate(X);
    if (X.complex.empty())
        throw std::invalid_argument("quotient: empty complex");

    QuotientData q;
    q.cover = barycentric_subdivision(X.complex);
    for (const auto& tag : q.cover.tags)
        q.cover_involution.push_back(q.cover.id_of(image(tag, X.involution)));

    q.orbit.assign(q.cover.num_vertices(), -1);
    for (std::size_t v = 0; v < q.cover.num_vertices(); ++v)
    {
        if (q.orbit[v] >= 0)
            continue;
        const int id = static_cast<int>(q.section.size());
        q.orbit[v] = id;
        q.orbit[q.cover_involution[v]] = id;
        q.section.push_back(static_cast<VertexId>(v));
    }
    project(q);
    return q;
}

QuotientData with_section(QuotientData q, const std::vector<VertexId>& section)
{
    if (section.size() != q.section.size())
        throw std::invalid_argument("with_section: wrong number of representatives");
    for (std::size_t o = 0; o < section.size(); ++o)
        if (section[o] < 0 || static_cast<std::size_t>(section[o]) >= q.orbit.size() ||
            q.orbit[section[o]] != static_cast<int>(o))
            throw std::invalid_argument("with_section: representative outside its orbit");
    q.section = section;
    return q;
}

QuotientData relabel(const QuotientData& q, const std::vector<int>& permutation)
{
    const std::size_t n = q.section.size();
    std::vector<int> check(permutation);
    std::sort(check.begin(), check.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (check != identity)
        throw std::invalid_argument("relabel: not a permutation of the quotient vertices");

    QuotientData r = q;
    for (auto& o : r.orbit)
        o = permutation[o];
    for (std::size_t v = 0; v < n; ++v)
        r.section[permutation[v]] = q.section[v];
    project(r);
    return r;
}

F2Cochain zero_cochain(int degree, const QuotientData& q)
{
    return {degree, boost::dynamic_bitset<>(q.count(degree))};
}

F2Cochain operator+(const F2Cochain& a, const F2Cochain& b)
{
    if (a.degree != b.degree || a.bits.size() != b.bits.size())
        throw std::invalid_argument("cochain sum: degree mismatch");
    return {a.degree, a.bits ^ b.bits};
}

F2Cochain coboundary(const F2Cochain& x, const QuotientData& q)
{
    F2Cochain out = zero_cochain(x.degree + 1, q);
    if (x.bits.size() != q.count(x.degree))
        throw std::invalid_argument("coboundary: cochain does not match the quotient");
    if (x.degree + 1 > q.dim() || x.degree < 0)
        return out;
    const auto& faces = q.position[x.degree];
    const auto& upper = q.simplices[x.degree + 1];
    for (std::size_t i = 0; i < upper.size(); ++i)
    {
        bool bit = false;
        for (const auto& f : upper[i].boundary_faces())
            bit ^= x.bits[faces.at(f)];
        out.bits[i] = bit;
    }
    return out;
}

F2Cochain characteristic_cocycle(const QuotientData& q)
{
    F2Cochain w = zero_cochain(1, q);
    if (q.dim() < 1)
        return w;
    for (std::size_t i = 0; i < q.simplices[1].size(); ++i)
    {
        const Simplex& e = q.simplices[1][i];
        const VertexId start = q.section[e[0]];
        const VertexId same = q.section[e[1]];
        const VertexId other = q.cover_involution[same];
        if (q.cover_edges.contains(Simplex{start, same}))
            w.bits[i] = false;
        else if (q.cover_edges.contains(Simplex{start, other}))
            w.bits[i] = true;
        else
            throw std::logic_error("characteristic_cocycle: quotient edge has no lift");
    }
    return w;
}

F2Cochain cup_product(const F2Cochain& a, const F2Cochain& b, const QuotientData& q)
{
    const int degree = a.degree + b.degree;
    F2Cochain out = zero_cochain(degree, q);
    if (degree > q.dim())
        return out;
    const auto& layer = q.simplices[degree];
    for (std::size_t i = 0; i < layer.size(); ++i)
    {
        const auto& v = layer[i].vertices();
        const Simplex front(std::vector<VertexId>(v.begin(), v.begin() + a.degree + 1));
        const Simplex back(std::vector<VertexId>(v.begin() + a.degree, v.end()));
        out.bits[i] = a.bits[q.position[a.degree].at(front)] && b.bits[q.position[b.degree].at(back)];
    }
    return out;
}

F2Cochain cup_power(const F2Cochain& w, int n, const QuotientData& q)
{
    if (w.degree != 1)
        throw std::invalid_argument("cup_power: expected a degree-one cochain");
    if (n < 0)
        throw std::invalid_argument("cup_power: negative exponent");
    if (n == 0)
    {
        F2Cochain unit = zero_cochain(0, q);
        unit.bits.set();
        return unit;
    }
    F2Cochain power = w;
    for (int k = 1; k < n; ++k)
        power = cup_product(power, w, q);
    return power;
}

bool is_coboundary(const F2Cochain& x, const QuotientData& q)
{
    if (x.bits.size() != q.count(x.degree))
        throw std::invalid_argument("is_coboundary: cochain does not match the quotient");
    if (!coboundary(x, q).is_zero())
        throw std::invalid_argument("is_coboundary: cochain is not a cocycle");
    if (x.degree <= 0 || x.is_zero())
        return x.is_zero();

    // Rows are the equations (delta y)(s) = x(s); unknowns are the values of
    // y on (degree-1)-simplices, with the right-hand side in the last bit.
    const auto& lower = q.position[x.degree - 1];
    const std::size_t unknowns = lower.size();
    std::vector<boost::dynamic_bitset<> > pivots(unknowns + 1);
    const auto& layer = q.simplices[x.degree];
    for (std::size_t i = 0; i < layer.size(); ++i)
    {
        boost::dynamic_bitset<> row(unknowns + 1);
        for (const auto& f : layer[i].boundary_faces())
            row.flip(lower.at(f));
        row[unknowns] = x.bits[i];
        for (std::size_t lead = row.find_first(); lead != boost::dynamic_bitset<>::npos; lead = row.find_first())
        {
            if (lead == unknowns)
                return false;   // 0 = 1
            if (pivots[lead].empty())
            {
                pivots[lead] = std::move(row);
                break;
            }
            row ^= pivots[lead];
        }
    }
    return true;
}

int hind(const QuotientData& q)
{
    const F2Cochain w = characteristic_cocycle(q);
    int best = 0;
    for (int n = 0; n <= q.dim(); ++n)
        if (!is_coboundary(cup_power(w, n, q), q))
            best = n;
    return best;
}

int hind(const Z2Complex& X)
{
    return hind(quotient(X));
}

UnionIndex disjoint_union_index(const std::vector<Z2Complex>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("disjoint_union_index: no parts");
    UnionIndex out;
    for (const auto& p : parts)
        out.parts.push_back(hind(p));
    out.max_of_parts = *std::max_element(out.parts.begin(), out.parts.end());
    out.direct = hind(disjoint_union(parts));
    if (out.direct != out.max_of_parts)
        throw VerificationFailure("disjoint union index " + std::to_string(out.direct) +
                                  " differs from the maximum over parts " + std::to_string(out.max_of_parts));
    return out;
}

}   // namespace cpt
