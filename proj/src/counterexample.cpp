#include "cpt/counterexample.hpp"

#include <map>
#include <stdexcept>

#include "cpt/exact_lp.hpp"
#include "cpt/parallel.hpp"
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

std::string describe(const std::vector<Simplex>& tuple)
{
    std::string out;
    for (const auto& F : tuple)
        out += describe(F);
    return out;
}

std::vector<Simplex> all_faces(int m)
{
    std::vector<Simplex> faces;
    for (int k = 0; k <= m; ++k)
    {
        const auto layer = faces_of_simplex(m, k);
        faces.insert(faces.end(), layer.begin(), layer.end());
    }
    return faces;
}

using ImageTable = std::map<Simplex, std::vector<VPolytope<Rational> > >;

ImageTable image_table(const CounterexampleSpec& spec)
{
    ImageTable table;
    for (const auto& F : all_faces(spec.m))
        table.emplace(F, pl_image_of_face(spec.f, F));
    return table;
}

// Certificates that every polytope of f(F_i) misses every polytope of f(F_j),
// j != i, or nullopt at the first pair that meets.
std::optional<std::vector<PairCertificate> > isolate(const std::vector<Simplex>& tuple, int i, const ImageTable& images)
{
    std::vector<PairCertificate> certs;
    const auto& mine = images.at(tuple[i]);
    for (int j = 0; j < static_cast<int>(tuple.size()); ++j)
    {
        if (j == i)
            continue;
        const auto& theirs = images.at(tuple[j]);
        for (std::size_t a = 0; a < mine.size(); ++a)
            for (std::size_t b = 0; b < theirs.size(); ++b)
            {
                const std::vector<VPolytope<Rational> > pair{mine[a], theirs[b]};
                const auto common = polytopes_common_point(pair);
                if (common.found)
                    return std::nullopt;
                if (!certifies_infeasibility(common_point_system(pair), common.farkas))
                    throw std::logic_error("verify_isolation: Farkas certificate does not verify");
                certs.push_back({j, static_cast<int>(a), static_cast<int>(b), common.farkas});
            }
    }
    return certs;
}

std::uint64_t certificate_digest(const std::vector<PairCertificate>& certs)
{
    std::string bytes;
    for (const auto& c : certs)
    {
        bytes += std::to_string(c.j) + ":" + std::to_string(c.polytope_i) + ":" + std::to_string(c.polytope_j) + ":";
        for (Eigen::Index k = 0; k < c.farkas.size(); ++k)
            bytes += to_string(c.farkas(k)) + ",";
        bytes += ";";
    }
    return fnv1a(bytes);
}

}   // namespace

std::uint64_t fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool is_prime_power(int n)
{
    if (n < 2)
        return false;
    int p = 2;
    while (n % p != 0)
        ++p;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

CounterexampleSpec skeleton_cone_map(int d, int r, int m)
{
    if (d < 1)
        throw std::invalid_argument("skeleton_cone_map: d must be at least 1");
    if (r < 2)
        throw std::invalid_argument("skeleton_cone_map: r must be at least 2");
    if (m < 1)
        throw std::invalid_argument("skeleton_cone_map: m must be at least 1");

    CounterexampleSpec spec;
    spec.d = d;
    spec.r = r;
    spec.m = m;
    spec.W = cone(skeleton(simplex_complex(m), d - 1), m + 1);
    spec.W_realization = realize_standard(m);

    PLMapSpec& f = spec.f;
    const Realization base = realize_standard(m);
    f.source = barycentric_subdivision(simplex_complex(m));
    f.source_realization = realize_barycentric(f.source, base);
    f.target = spec.W;
    f.target_realization = spec.W_realization;
    for (const auto& tag : f.source.tags)
        f.vertex_images.push_back(tag.dim() <= d - 1 ? barycenter(tag, base) : spec.apex_point());
    return spec;
}

CounterexampleSpec build_counterexample(int d, int r)
{
    return skeleton_cone_map(d, r, (d + 1) * r - 2);
}

std::vector<std::vector<Simplex> > enumerate_disjoint_tuples(int m, int r)
{
    if (r < 1)
        throw std::invalid_argument("enumerate_disjoint_tuples: r must be positive");
    const std::vector<Simplex> faces = all_faces(m);
    std::vector<std::vector<Simplex> > out;
    std::vector<Simplex> current;
    std::vector<bool> used(m + 1, false);

    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == r)
        {
            out.push_back(current);
            return;
        }
        for (std::size_t k = start; k < faces.size(); ++k)
        {
            const Simplex& F = faces[k];
            if (std::any_of(F.vertices().begin(), F.vertices().end(), [&](VertexId v) { return used[v]; }))
                continue;
            for (VertexId v : F.vertices())
                used[v] = true;
            current.push_back(F);
            self(self, k + 1);
            current.pop_back();
            for (VertexId v : F.vertices())
                used[v] = false;
        }
    };
    extend(extend, 0);
    return out;
}

void check_map_invariants(const CounterexampleSpec& spec)
{
    const Point& c = spec.apex_point();
    const Realization& real = spec.W_realization;
    for (const auto& F : all_faces(spec.m))
    {
        PointMatrix corners(spec.m + 1, static_cast<Eigen::Index>(F.size()));
        for (std::size_t j = 0; j < F.size(); ++j)
            corners.col(static_cast<Eigen::Index>(j)) = real.at(F[j]);

        for (const auto& P : pl_image_of_face(spec.f, F))
        {
            if (F.dim() <= spec.d - 1)
            {
                for (Eigen::Index v = 0; v < P.vertices.cols(); ++v)
                    if (!in_convex_hull(Point(P.vertices.col(v)), corners))
                        throw VerificationFailure("image of the small face " + describe(F) + " leaves the face");
            }
            else if (!in_convex_hull(c, P.vertices))
                throw VerificationFailure("image polytope of the face " + describe(F) + " misses the apex");

            for (Eigen::Index v = 0; v < P.vertices.cols(); ++v)
            {
                const Point y = P.vertices.col(v);
                if (y == c)
                    continue;
                int support = 0;
                for (Eigen::Index k = 0; k < y.size(); ++k)
                    support += y(k) != 0 ? 1 : 0;
                if (support > spec.d || !in_convex_hull(y, corners))
                    throw VerificationFailure("image vertex of " + describe(F) +
                                              " is outside the (d-1)-skeleton of the face");
            }
        }
    }
}

IsolationReport verify_isolation(const CounterexampleSpec& spec, int jobs)
{
    check_map_invariants(spec);
    const ImageTable images = image_table(spec);
    const auto tuples = enumerate_disjoint_tuples(spec.m, spec.r);
    const bool pigeonhole = spec.m == (spec.d + 1) * spec.r - 2;

    IsolationReport report;
    report.d = spec.d;
    report.r = spec.r;
    report.m = spec.m;
    report.tuples = parallel_map<TupleIsolation>(tuples.size(), jobs, [&](std::size_t t) {
        TupleIsolation row;
        row.faces = tuples[t];
        const int r = static_cast<int>(row.faces.size());
        for (int i = 0; i < r && row.combinatorial < 0; ++i)
            if (row.faces[i].dim() <= spec.d - 1)
                row.combinatorial = i;
        if (pigeonhole && row.combinatorial < 0)
            throw VerificationFailure("no face of dimension <= d-1 in the tuple " + describe(row.faces));

        for (int i = 0; i < r; ++i)
            if (auto certs = isolate(row.faces, i, images))
            {
                row.isolated = i;
                row.certificates = std::move(*certs);
                break;
            }
        if (row.isolated < 0)
            throw VerificationFailure("no isolated face in the tuple " + describe(row.faces));
        if (row.combinatorial >= 0 && row.combinatorial != row.isolated &&
            !isolate(row.faces, row.combinatorial, images))
            throw VerificationFailure("the small face " + describe(row.faces[row.combinatorial]) +
                                      " is not isolated in the tuple " + describe(row.faces));
        row.digest = certificate_digest(row.certificates);
        return row;
    });
    return report;
}

ProbeResult probe_tverberg_plus_one(int d, int r)
{
    ProbeResult out;
    out.d = d;
    out.r = r;
    out.m = (d + 1) * r - 1;
    const CounterexampleSpec spec = skeleton_cone_map(d, r, out.m);
    const ImageTable images = image_table(spec);

    for (const auto& tuple : enumerate_disjoint_tuples(out.m, r))
    {
        ++out.tuples_examined;
        std::vector<int> pick(r, 0);
        while (true)
        {
            std::vector<VPolytope<Rational> > chosen;
            for (int i = 0; i < r; ++i)
                chosen.push_back(images.at(tuple[i])[pick[i]]);
            const auto common = polytopes_common_point(chosen);
            if (common.found)
            {
                out.witness = ProbeWitness{tuple, pick, common.point};
                return out;
            }
            int i = r - 1;
            while (i >= 0 && ++pick[i] == static_cast<int>(images.at(tuple[i]).size()))
                pick[i--] = 0;
            if (i < 0)
                break;
        }
    }
    return out;
}

}   // namespace cpt
