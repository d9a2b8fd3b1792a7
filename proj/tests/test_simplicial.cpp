#include <catch_amalgamated.hpp>

#include "cpt/random.hpp"
#include "cpt/simplicial.hpp"
#include "oracles.hpp"

using cpt::Point;
using cpt::Rational;
using cpt::Simplex;
using cpt::SimplicialComplex;

namespace {

Point vec(std::initializer_list<Rational> xs)
{
    Point v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs)
        v(i++) = x;
    return v;
}

// Rational point on S^{n} by inverse stereographic projection of t in Q^n.
Point sphere_point(const Point& t)
{
    const Rational s = t.squaredNorm();
    Point x(t.size() + 1);
    x.head(t.size()) = Rational(2) * t / (s + 1);
    x(t.size()) = (s - 1) / (s + 1);
    return x;
}

bool in_some(const std::vector<cpt::VPolytope<Rational> >& polys, const Point& y)
{
    for (const auto& P : polys)
        if (cpt::in_convex_hull(y, P.vertices))
            return true;
    return false;
}

// Identity-like PL map: every subdivision vertex goes to its own position.
cpt::PLMapSpec identity_map(int m)
{
    cpt::PLMapSpec f;
    f.source = cpt::barycentric_subdivision(cpt::simplex_complex(m));
    f.source_realization = cpt::realize_barycentric(f.source, cpt::realize_standard(m));
    f.target = cpt::simplex_complex(m);
    f.target_realization = cpt::realize_standard(m);
    for (std::size_t v = 0; v < f.source.num_vertices(); ++v)
        f.vertex_images.push_back(f.source_realization.at(static_cast<int>(v)));
    return f;
}

}   // namespace

TEST_CASE("Simplex construction and relations", "[simplicial]")
{
    const Simplex s{2, 0, 1};
    REQUIRE(s.vertices() == std::vector<int>{0, 1, 2});
    REQUIRE(s.dim() == 2);
    REQUIRE(Simplex{0, 2}.is_face_of(s));
    REQUIRE_FALSE(Simplex{0, 3}.is_face_of(s));
    REQUIRE(Simplex{3, 4}.disjoint_from(s));
    REQUIRE_FALSE(Simplex{2, 4}.disjoint_from(s));
    REQUIRE(s.boundary_faces() == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(s.all_faces().size() == 7);
    REQUIRE_THROWS_AS(Simplex(std::vector<int>{}), std::invalid_argument);
    REQUIRE_THROWS_AS((Simplex{1, 1}), std::invalid_argument);
}

TEST_CASE("faces_of_simplex", "[simplicial]")
{
    REQUIRE(cpt::faces_of_simplex(2, 1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(cpt::faces_of_simplex(4, 2).size() == 10);
    REQUIRE(cpt::faces_of_simplex(8, 4).size() == 126);
    REQUIRE_THROWS_AS(cpt::faces_of_simplex(2, 3), std::invalid_argument);

    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= m; ++k)
        {
            const auto faces = cpt::faces_of_simplex(m, k);
            REQUIRE(static_cast<std::int64_t>(faces.size()) == oracle::binomial(m + 1, k + 1));
            REQUIRE(std::is_sorted(faces.begin(), faces.end()));
            REQUIRE(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
        }
}

TEST_CASE("skeleton", "[simplicial]")
{
    const auto pts = cpt::skeleton(cpt::simplex_complex(2), 0);
    REQUIRE(pts.facets() == std::vector<Simplex>{{0}, {1}, {2}});

    const auto k5 = cpt::skeleton(cpt::simplex_complex(4), 1);
    REQUIRE(k5.facets().size() == 10);
    REQUIRE(k5.vertices().size() == 5);
    REQUIRE(k5.dim() == 1);

    const auto boundary = cpt::skeleton(cpt::simplex_complex(3), 2);
    REQUIRE(boundary.facets().size() == 4);
    REQUIRE(boundary.f_vector() == std::vector<std::int64_t>{4, 6, 4});
    REQUIRE(boundary.euler_characteristic() == 2);
}

TEST_CASE("cone", "[simplicial]")
{
    const SimplicialComplex two_points({Simplex{0}, Simplex{1}});
    REQUIRE(cpt::cone(two_points, 5).facets() == std::vector<Simplex>{{0, 5}, {1, 5}});

    const auto tripod = cpt::cone(cpt::skeleton(cpt::simplex_complex(2), 0), 3);
    REQUIRE(tripod.facets() == std::vector<Simplex>{{0, 3}, {1, 3}, {2, 3}});

    const auto disc = cpt::cone(cpt::skeleton(cpt::simplex_complex(2), 1), 3);
    REQUIRE(disc.facets().size() == 3);
    REQUIRE(disc.dim() == 2);

    REQUIRE_THROWS_AS(cpt::cone(two_points, 1), std::invalid_argument);

    for (int m = 1; m <= 4; ++m)
        for (int k = 0; k < m; ++k)
        {
            const auto K = cpt::skeleton(cpt::simplex_complex(m), k);
            const auto C = cpt::cone(K, m + 1);
            REQUIRE(C.dim() == K.dim() + 1);
            REQUIRE(C.euler_characteristic() == 1);
        }
}

TEST_CASE("barycentric_subdivision", "[simplicial]")
{
    const auto sd1 = cpt::barycentric_subdivision(cpt::simplex_complex(1));
    REQUIRE(sd1.complex.f_vector() == std::vector<std::int64_t>{3, 2});

    const auto sd2 = cpt::barycentric_subdivision(cpt::simplex_complex(2));
    REQUIRE(sd2.complex.f_vector() == std::vector<std::int64_t>{7, 12, 6});

    const auto sd4 = cpt::barycentric_subdivision(cpt::simplex_complex(4));
    REQUIRE(sd4.complex.euler_characteristic() == 1);

    // Every simplex of the subdivision is a chain of base faces.
    for (const auto& s : sd2.complex.simplices(2))
    {
        REQUIRE(sd2.tags[s[0]].size() < sd2.tags[s[1]].size());
        REQUIRE(sd2.tags[s[0]].is_face_of(sd2.tags[s[1]]));
        REQUIRE(sd2.tags[s[1]].is_face_of(sd2.tags[s[2]]));
    }

    for (int m = 0; m <= 4; ++m)
    {
        const auto sd = cpt::barycentric_subdivision(cpt::simplex_complex(m));
        const auto f = sd.complex.f_vector();
        for (int k = 0; k <= m; ++k)
            REQUIRE(f[k] == oracle::face_chain_count(m, k + 1));
    }

    REQUIRE_THROWS_AS(cpt::barycentric_subdivision(SimplicialComplex()), std::invalid_argument);
}

TEST_CASE("realize_standard", "[simplicial]")
{
    const auto r1 = cpt::realize_standard(1);
    REQUIRE(r1.at(0) == vec({1, 0}));
    REQUIRE(r1.at(1) == vec({0, 1}));
    REQUIRE(r1.at(2) == vec({Rational(1, 2), Rational(1, 2)}));

    const auto r2 = cpt::realize_standard(2);
    REQUIRE(cpt::barycenter(Simplex{0, 1}, r2) == vec({Rational(1, 2), Rational(1, 2), 0}));

    const auto r4 = cpt::realize_standard(4);
    REQUIRE(r4.at(5) == Point::Constant(5, Rational(1, 5)));
    REQUIRE_THROWS_AS(r4.at(9), std::invalid_argument);
}

TEST_CASE("pl_image_of_face on the skeleton-cone map for m = 2", "[simplicial]")
{
    // Faces of dimension 0 keep their barycenter, larger faces go to the apex.
    const int m = 2;
    cpt::PLMapSpec f = identity_map(m);
    const Point c = cpt::realize_standard(m).at(m + 1);
    for (std::size_t v = 0; v < f.source.num_vertices(); ++v)
        if (f.source.tags[v].dim() >= 1)
            f.vertex_images[v] = c;

    const auto vertex_image = cpt::pl_image_of_face(f, Simplex{0});
    REQUIRE(vertex_image.size() == 1);
    REQUIRE(vertex_image[0].vertices == cpt::as_columns({vec({1, 0, 0})}));

    const auto edge_image = cpt::pl_image_of_face(f, Simplex{1, 2});
    REQUIRE(edge_image.size() == 2);
    REQUIRE(edge_image[0].vertices == cpt::as_columns({vec({0, 1, 0}), c}));
    REQUIRE(edge_image[1].vertices == cpt::as_columns({vec({0, 0, 1}), c}));

    REQUIRE_THROWS_AS(cpt::pl_image_of_face(f, Simplex{0, 7}), std::invalid_argument);
}

TEST_CASE("pl_image_of_face of an affine map is the hull of the vertex images", "[simplicial]")
{
    const std::vector<Point> images = {vec({0, 0}), vec({3, 0}), vec({0, 2}), vec({1, 1})};
    cpt::Realization target;
    target.ambient_dim = 2;
    const auto f = cpt::affine_pl_map(3, images, SimplicialComplex({Simplex{0}}), target);

    cpt::RationalSampler rng(5);
    for (const auto& F : {Simplex{0, 1}, Simplex{0, 1, 2}, Simplex{1, 2, 3}, Simplex{0, 1, 2, 3}})
    {
        std::vector<Point> corner_images;
        for (int v : F.vertices())
            corner_images.push_back(images[v]);
        const auto hull = cpt::as_columns(corner_images);
        const auto polys = cpt::pl_image_of_face(f, F);
        // Union is contained in the hull ...
        for (const auto& P : polys)
            for (Eigen::Index j = 0; j < P.size(); ++j)
                REQUIRE(cpt::in_convex_hull(Point(P.vertices.col(j)), hull));
        // ... and covers it.
        for (int trial = 0; trial < 15; ++trial)
        {
            Point w(static_cast<Eigen::Index>(F.size()));
            for (Eigen::Index i = 0; i < w.size(); ++i)
                w(i) = Rational(rng.uniform_int(0, 6));
            if (w.sum() == 0)
                w(0) = 1;
            w /= w.sum();
            REQUIRE(in_some(polys, hull * w));
        }
    }
}

TEST_CASE("Chain polytopes cover the realized face", "[simplicial][property]")
{
    cpt::RationalSampler rng(17);
    for (int m = 1; m <= 3; ++m)
    {
        const auto f = identity_map(m);
        for (int k = 0; k <= m; ++k)
            for (const auto& F : cpt::faces_of_simplex(m, k))
            {
                const auto polys = cpt::pl_image_of_face(f, F);
                for (int trial = 0; trial < 4; ++trial)
                {
                    Point w = Point::Zero(m + 1);
                    for (int v : F.vertices())
                        w(v) = Rational(rng.uniform_int(1, 9));
                    w /= w.sum();
                    REQUIRE(in_some(polys, w));
                    REQUIRE(cpt::pl_evaluate(f, w) == w);
                }
            }
    }
}

TEST_CASE("pl_evaluate matches the affine extension", "[simplicial]")
{
    const std::vector<Point> images = {vec({2}), vec({-1}), vec({5})};
    cpt::Realization target;
    target.ambient_dim = 1;
    const auto f = cpt::affine_pl_map(2, images, SimplicialComplex({Simplex{0}}), target);
    const Point w = vec({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    REQUIRE(cpt::pl_evaluate(f, w) == vec({Rational(1) - Rational(1, 3) + Rational(5, 6)}));
    REQUIRE_THROWS_AS(cpt::pl_evaluate(f, vec({1, 1, -1})), std::invalid_argument);
}

TEST_CASE("squaring_map", "[simplicial]")
{
    REQUIRE(cpt::squaring_map(vec({1, 0})) == vec({1, 0}));
    REQUIRE(cpt::squaring_map(vec({Rational(3, 5), Rational(4, 5)})) == vec({Rational(9, 25), Rational(16, 25)}));
    REQUIRE_THROWS_AS(cpt::squaring_map(vec({1, 1})), std::invalid_argument);

    cpt::RationalSampler rng(3);
    for (int trial = 0; trial < 100; ++trial)
    {
        const int m = static_cast<int>(rng.uniform_int(1, 4));
        const Point x = sphere_point(rng.point(m));
        REQUIRE(x.squaredNorm() == 1);
        const Point g = cpt::squaring_map(x);
        REQUIRE(g == cpt::squaring_map(Point(-x)));
        REQUIRE((g.array() >= Rational(0)).all());
        REQUIRE(g.sum() == 1);
    }
}
