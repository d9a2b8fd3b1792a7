#include "cpt/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cpt {

namespace {

// All k-subsets of `v` (sorted input gives sorted output, lex order).
void for_each_subset(const std::vector<VertexId>& v, std::size_t k, std::vector<VertexId>& current,
                     std::size_t start, std::vector<std::vector<VertexId> >& out)
{
    if (current.size() == k)
    {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= v.size(); ++i)
    {
        current.push_back(v[i]);
        for_each_subset(v, k, current, i + 1, out);
        current.pop_back();
    }
}

std::vector<std::vector<VertexId> > subsets_of_size(const std::vector<VertexId>& v, std::size_t k)
{
    std::vector<std::vector<VertexId> > out;
    std::vector<VertexId> current;
    for_each_subset(v, k, current, 0, out);
    return out;
}

}   // namespace

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

Simplex::Simplex(std::vector<VertexId> vertices) : v_(std::move(vertices))
{
    if (v_.empty())
        throw std::invalid_argument("Simplex: empty vertex list");
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw std::invalid_argument("Simplex: repeated vertex");
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const
{
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end())
    {
        if (*a == *b)
            return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

std::vector<Simplex> Simplex::boundary_faces() const
{
    std::vector<Simplex> out;
    if (v_.size() < 2)
        return out;
    // Dropping vertices from the back first gives lex order.
    for (std::size_t i = v_.size(); i-- > 0;)
    {
        std::vector<VertexId> f;
        f.reserve(v_.size() - 1);
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (j != i)
                f.push_back(v_[j]);
        out.push_back(Simplex(std::move(f), Trusted{}));
    }
    return out;
}

std::vector<Simplex> Simplex::all_faces() const
{
    std::vector<Simplex> out;
    for (std::size_t k = 1; k <= v_.size(); ++k)
        for (auto& s : subsets_of_size(v_, k))
            out.push_back(Simplex(std::move(s), Trusted{}));
    return out;
}

Simplex Simplex::with_vertex(VertexId v) const
{
    std::vector<VertexId> w = v_;
    w.push_back(v);
    return Simplex(std::move(w));
}

// ---------------------------------------------------------------------------
// SimplicialComplex
// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices)
{
    std::sort(simplices.begin(), simplices.end(), DimLexLess{});
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    std::set<Simplex> proper_faces;
    for (const auto& s : simplices)
        for (const auto& f : s.all_faces())
            if (f.size() < s.size())
                proper_faces.insert(f);
    for (auto& s : simplices)
        if (!proper_faces.contains(s))
            facets_.push_back(std::move(s));
}

std::vector<VertexId> SimplicialComplex::vertices() const
{
    std::set<VertexId> vs;
    for (const auto& f : facets_)
        vs.insert(f.vertices().begin(), f.vertices().end());
    return {vs.begin(), vs.end()};
}

int SimplicialComplex::dim() const
{
    return facets_.empty() ? -1 : facets_.back().dim();
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

std::vector<Simplex> SimplicialComplex::simplices(int k) const
{
    std::set<Simplex> out;
    for (const auto& f : facets_)
    {
        if (f.dim() < k)
            continue;
        for (auto& s : subsets_of_size(f.vertices(), static_cast<std::size_t>(k + 1)))
            out.insert(Simplex(std::move(s)));
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<Simplex> > SimplicialComplex::simplices_by_dim() const
{
    std::vector<std::vector<Simplex> > out;
    for (int k = 0; k <= dim(); ++k)
        out.push_back(simplices(k));
    return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const
{
    std::vector<std::int64_t> f;
    for (int k = 0; k <= dim(); ++k)
        f.push_back(static_cast<std::int64_t>(simplices(k).size()));
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const
{
    std::int64_t chi = 0;
    const auto f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * f[k];
    return chi;
}

SimplicialComplex simplex_complex(int m)
{
    if (m < 0)
        throw std::invalid_argument("simplex_complex: negative dimension");
    std::vector<VertexId> v(m + 1);
    for (int i = 0; i <= m; ++i)
        v[i] = i;
    return SimplicialComplex({Simplex(v)});
}

std::vector<Simplex> faces_of_simplex(int m, int dim)
{
    if (m < 0 || dim < 0 || dim > m)
        throw std::invalid_argument("faces_of_simplex: need 0 <= dim <= m, got dim=" + std::to_string(dim) +
                                    ", m=" + std::to_string(m));
    std::vector<VertexId> v(m + 1);
    for (int i = 0; i <= m; ++i)
        v[i] = i;
    std::vector<Simplex> out;
    for (auto& s : subsets_of_size(v, static_cast<std::size_t>(dim + 1)))
        out.push_back(Simplex(std::move(s)));
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k)
{
    if (k < 0)
        throw std::invalid_argument("skeleton: negative dimension");
    std::vector<Simplex> keep;
    for (const auto& f : K.facets())
    {
        if (f.dim() <= k)
            keep.push_back(f);
        else
            for (auto& s : subsets_of_size(f.vertices(), static_cast<std::size_t>(k + 1)))
                keep.push_back(Simplex(std::move(s)));
    }
    return SimplicialComplex(std::move(keep));
}

SimplicialComplex cone(const SimplicialComplex& K, VertexId apex)
{
    for (const auto& f : K.facets())
        if (f.contains(apex))
            throw std::invalid_argument("cone: apex " + std::to_string(apex) + " is already a vertex");
    if (K.empty())
        return SimplicialComplex({Simplex{apex}});
    std::vector<Simplex> coned;
    coned.reserve(K.facets().size());
    for (const auto& f : K.facets())
        coned.push_back(f.with_vertex(apex));
    return SimplicialComplex(std::move(coned));
}

// ---------------------------------------------------------------------------
// Barycentric subdivision
// ---------------------------------------------------------------------------

VertexId BarycentricComplex::id_of(const Simplex& face) const
{
    auto it = index.find(face);
    if (it == index.end())
        throw std::invalid_argument("BarycentricComplex: not a face of the base complex");
    return it->second;
}

BarycentricComplex barycentric_subdivision(const SimplicialComplex& K)
{
    if (K.empty())
        throw std::invalid_argument("barycentric_subdivision: empty complex");
    BarycentricComplex sd;
    sd.base = K;
    for (auto& layer : K.simplices_by_dim())
        for (auto& s : layer)
        {
            sd.index.emplace(s, static_cast<VertexId>(sd.tags.size()));
            sd.tags.push_back(std::move(s));
        }

    // Maximal chains run from a vertex up to a facet, adding one vertex per
    // step: one chain per ordering of each facet's vertices.
    std::vector<Simplex> chains;
    for (const auto& F : K.facets())
    {
        std::vector<VertexId> order = F.vertices();
        do
        {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (VertexId v : order)
            {
                prefix.push_back(v);
                chain.push_back(sd.id_of(Simplex(prefix)));
            }
            chains.push_back(Simplex(std::move(chain)));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    sd.complex = SimplicialComplex(std::move(chains));
    return sd;
}

// ---------------------------------------------------------------------------
// Realizations and PL maps
// ---------------------------------------------------------------------------

const Point& Realization::at(VertexId v) const
{
    auto it = points.find(v);
    if (it == points.end())
        throw std::invalid_argument("Realization: vertex " + std::to_string(v) + " has no point");
    return it->second;
}

Realization realize_standard(int m)
{
    if (m < 0)
        throw std::invalid_argument("realize_standard: negative dimension");
    Realization r;
    r.ambient_dim = m + 1;
    for (int i = 0; i <= m; ++i)
        r.points.emplace(i, unit_vector(m + 1, i));
    r.points.emplace(m + 1, Point::Constant(m + 1, Rational(1, m + 1)));
    return r;
}

Point barycenter(const Simplex& face, const Realization& realization)
{
    Point sum = Point::Zero(realization.ambient_dim);
    for (VertexId v : face.vertices())
        sum += realization.at(v);
    return sum / Rational(static_cast<long>(face.size()));
}

Realization realize_barycentric(const BarycentricComplex& sd, const Realization& base)
{
    Realization r;
    r.ambient_dim = base.ambient_dim;
    for (std::size_t v = 0; v < sd.tags.size(); ++v)
        r.points.emplace(static_cast<VertexId>(v), barycenter(sd.tags[v], base));
    return r;
}

PLMapSpec affine_pl_map(int m, const std::vector<Point>& base_images, SimplicialComplex target,
                        Realization target_realization)
{
    if (static_cast<int>(base_images.size()) != m + 1)
        throw std::invalid_argument("affine_pl_map: need one image per base vertex");
    PLMapSpec f;
    f.source = barycentric_subdivision(simplex_complex(m));
    f.source_realization = realize_barycentric(f.source, realize_standard(m));
    f.target = std::move(target);
    f.target_realization = std::move(target_realization);
    for (const auto& tag : f.source.tags)
    {
        Point sum = Point::Zero(f.target_realization.ambient_dim);
        for (VertexId v : tag.vertices())
        {
            if (base_images[v].size() != f.target_realization.ambient_dim)
                throw std::invalid_argument("affine_pl_map: image has wrong dimension");
            sum += base_images[v];
        }
        f.vertex_images.push_back(sum / Rational(static_cast<long>(tag.size())));
    }
    return f;
}

std::vector<VPolytope<Rational> > pl_image_of_face(const PLMapSpec& f, const Simplex& F)
{
    if (!f.source.base.contains(F))
        throw std::invalid_argument("pl_image_of_face: not a face of the source simplex");

    std::vector<VPolytope<Rational> > out;
    std::set<std::vector<std::vector<std::string> > > seen;
    std::vector<VertexId> order = F.vertices();
    do
    {
        std::vector<Point> images;
        std::vector<VertexId> prefix;
        for (VertexId v : order)
        {
            prefix.push_back(v);
            images.push_back(f.vertex_images.at(f.source.id_of(Simplex(prefix))));
        }
        std::sort(images.begin(), images.end(), lex_less);
        images.erase(std::unique(images.begin(), images.end()), images.end());

        std::vector<std::vector<std::string> > key;
        for (const auto& p : images)
            key.push_back(to_strings(p));
        if (seen.insert(std::move(key)).second)
            out.push_back({as_columns(images)});
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

Point pl_evaluate(const PLMapSpec& f, const Point& weights)
{
    const int m = f.source_dim();
    if (weights.size() != m + 1)
        throw std::invalid_argument("pl_evaluate: expected barycentric coordinates of length m+1");
    if ((weights.array() < Rational(0)).any() || weights.sum() != 1)
        throw std::invalid_argument("pl_evaluate: point is not in the simplex");

    // Sorting coordinates decreasingly selects the chain F_0 < F_1 < ... whose
    // simplex of the subdivision contains the point; the coefficient of the
    // barycenter of F_j is (j+1)(w_{s_j} - w_{s_{j+1}}).
    std::vector<VertexId> order(m + 1);
    for (int i = 0; i <= m; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return weights(a) > weights(b); });

    Point out = Point::Zero(f.target_ambient_dim());
    std::vector<VertexId> prefix;
    for (int j = 0; j <= m; ++j)
    {
        prefix.push_back(order[j]);
        const Rational next = j < m ? weights(order[j + 1]) : Rational(0);
        const Rational coeff = Rational(j + 1) * (weights(order[j]) - next);
        if (coeff != 0)
            out += coeff * f.vertex_images.at(f.source.id_of(Simplex(prefix)));
    }
    return out;
}

Point squaring_map(const Point& x)
{
    if (x.squaredNorm() != 1)
        throw std::invalid_argument("squaring_map: point is not on the unit sphere");
    return x.cwiseProduct(x);
}

}   // namespace cpt
