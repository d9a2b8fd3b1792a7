#include <catch_amalgamated.hpp>

#include "cpt/centerpoint.hpp"
#include "cpt/random.hpp"
#include "cpt/verification.hpp"
#include "oracles.hpp"

using cpt::Point;
using cpt::PointConfig;
using cpt::Rational;

namespace {

Point vec(std::initializer_list<Rational> xs)
{
    Point v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs)
        v(i++) = x;
    return v;
}

PointConfig line(std::initializer_list<Rational> xs)
{
    std::vector<Point> pts;
    for (const auto& x : xs)
        pts.push_back(vec({x}));
    return PointConfig(1, pts);
}

PointConfig square()
{
    return PointConfig(2, {vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})});
}

// Small integer grid, so repeated and collinear points are common.
PointConfig grid_config(int d, int n, int range, cpt::RationalSampler& rng)
{
    std::vector<Point> pts;
    for (int j = 0; j < n; ++j)
    {
        Point p(d);
        for (int i = 0; i < d; ++i)
            p(i) = Rational(rng.uniform_int(-range, range));
        pts.push_back(p);
    }
    return PointConfig(d, pts);
}

std::vector<Rational> values_on_line(const PointConfig& X)
{
    std::vector<Rational> v;
    for (int j = 0; j < X.size(); ++j)
        v.push_back(X.points(0, j));
    return v;
}

bool oracle_hull_depth(const Point& x, const PointConfig& X, int q)
{
    if (q == 0)
        return false;
    std::vector<int> pick(X.size(), 0);
    std::fill(pick.end() - q, pick.end(), 1);
    do
    {
        std::vector<Point> F;
        for (int j = 0; j < X.size(); ++j)
            if (pick[j])
                F.push_back(X.point(j));
        if (!oracle::in_hull_caratheodory(x, F))
            return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return true;
}

}   // namespace

TEST_CASE("point configurations", "[centerpoint]")
{
    CHECK(square().size() == 4);
    CHECK(square().point(2) == vec({1, 1}));
    CHECK_THROWS_AS(PointConfig(2, std::vector<Point>{vec({0, 0}), vec({1})}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfig(0, std::vector<Point>{}), std::invalid_argument);
    CHECK_THROWS_AS(cpt::tukey_depth(vec({0}), square()), std::invalid_argument);
}

TEST_CASE("tukey depth examples", "[centerpoint]")
{
    const auto X = line({0, 1, 2});
    auto c = cpt::tukey_depth(vec({1}), X);
    CHECK(c.depth == 2);
    CHECK(c.witness.contains(vec({1})));
    CHECK(cpt::count_in(c.witness, X) == 2);

    c = cpt::tukey_depth(vec({Rational(1, 2), Rational(1, 2)}), square());
    CHECK(c.depth == 2);
    CHECK(c.separated.size() == 2);

    c = cpt::tukey_depth(vec({10, 10}), square());
    CHECK(c.depth == 0);
    CHECK(cpt::count_in(c.witness, square()) == 0);
    CHECK(c.witness.contains(vec({10, 10})));

    // Every point coincides with x.
    const auto same = line({3, 3, 3});
    c = cpt::tukey_depth(vec({3}), same);
    CHECK(c.depth == 3);
    CHECK(c.separated.empty());
}

TEST_CASE("depth on the line matches order statistics", "[centerpoint]")
{
    cpt::RationalSampler rng(17);
    for (int trial = 0; trial < 60; ++trial)
    {
        const int n = static_cast<int>(rng.uniform_int(1, 9));
        const auto X = grid_config(1, n, 4, rng);
        const Point x = vec({Rational(rng.uniform_int(-10, 10), 2)});
        const auto c = cpt::tukey_depth(x, X);
        CHECK(c.depth == oracle::depth_on_line(x(0), values_on_line(X)));
        CHECK(c.witness.contains(x));
        CHECK(cpt::count_in(c.witness, X) == c.depth);
    }
}

TEST_CASE("hull membership depth", "[centerpoint]")
{
    const auto X = line({0, 1, 2});
    CHECK(cpt::hull_membership_depth(vec({1}), X, 2));
    CHECK_FALSE(cpt::hull_membership_depth(vec({0}), X, 2));
    CHECK(cpt::hull_membership_depth(vec({Rational(1, 2), Rational(1, 2)}), square(), 3));
    CHECK_FALSE(cpt::hull_membership_depth(vec({Rational(1, 2), Rational(1, 2)}), square(), 2));
    CHECK_FALSE(cpt::hull_membership_depth(vec({1}), X, 0));
    CHECK_THROWS_AS(cpt::hull_membership_depth(vec({1}), X, 4), std::invalid_argument);
}

TEST_CASE("depth and hull membership are equivalent", "[centerpoint]")
{
    cpt::RationalSampler rng(2718);
    for (int trial = 0; trial < 60; ++trial)
    {
        const int d = static_cast<int>(rng.uniform_int(1, 2));
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const auto X = grid_config(d, n, 2, rng);
        Point x(d);
        for (int i = 0; i < d; ++i)
            x(i) = Rational(rng.uniform_int(-4, 4), 2);
        const int depth = cpt::tukey_depth(x, X).depth;
        for (int r = 1; r <= n + 1; ++r)
        {
            const bool hull = cpt::hull_membership_depth(x, X, n - r + 1);
            CHECK((depth >= r) == hull);
            CHECK(hull == oracle_hull_depth(x, X, n - r + 1));
        }
    }
}

TEST_CASE("tverberg partitions", "[tverberg]")
{
    SECTION("square: diagonals")
    {
        const auto t = cpt::tverberg_partition(square(), 2);
        REQUIRE(t);
        CHECK(t->blocks == std::vector<std::vector<int> >{{0, 2}, {1, 3}});
        CHECK(t->x == vec({Rational(1, 2), Rational(1, 2)}));
        CHECK(cpt::verify_tverberg(*t, square()));
    }
    SECTION("three points on a line")
    {
        const auto X = line({0, 1, 2});
        const auto t = cpt::tverberg_partition(X, 2);
        REQUIRE(t);
        CHECK(t->blocks == std::vector<std::vector<int> >{{0, 2}, {1}});
        CHECK(t->x == vec({1}));
        CHECK(cpt::verify_tverberg(*t, X));
    }
    SECTION("triangle has no Radon partition")
    {
        const PointConfig T(2, {vec({0, 0}), vec({1, 0}), vec({0, 1})});
        CHECK_FALSE(cpt::tverberg_partition(T, 2));
        CHECK_FALSE(cpt::tverberg_by_candidates(T, 2));
    }
    SECTION("trivial cases")
    {
        const auto X = line({5, 7});
        const auto one = cpt::tverberg_partition(X, 1);
        REQUIRE(one);
        CHECK(one->blocks == std::vector<std::vector<int> >{{0, 1}});
        CHECK_FALSE(cpt::tverberg_partition(X, 3));
        CHECK_THROWS_AS(cpt::tverberg_partition(X, 0), std::invalid_argument);
    }
    SECTION("certificate checker rejects tampering")
    {
        auto t = *cpt::tverberg_partition(square(), 2);
        auto bad = t;
        bad.x(0) += 1;
        CHECK_FALSE(cpt::verify_tverberg(bad, square()));
        bad = t;
        bad.blocks[0].pop_back();
        bad.weights[0] = vec({1});
        CHECK_FALSE(cpt::verify_tverberg(bad, square()));
    }
}

TEST_CASE("tverberg at the guaranteed size", "[tverberg]")
{
    cpt::RationalSampler rng(42);
    const std::vector<std::pair<int, int> > cases{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 4}};
    for (const auto& [d, r] : cases)
    {
        for (int trial = 0; trial < 8; ++trial)
        {
            const int n = (d + 1) * (r - 1) + 1;
            const auto X = PointConfig(d, rng.points(n, d));
            const auto t = cpt::tverberg_partition(X, r);
            REQUIRE(t);
            CHECK(static_cast<int>(t->blocks.size()) == r);
            CHECK(cpt::verify_tverberg(*t, X));
            CHECK(cpt::tukey_depth(t->x, X).depth >= r);

            const auto u = cpt::tverberg_by_candidates(X, r);
            REQUIRE(u);
            CHECK(cpt::verify_tverberg(*u, X));
            CHECK(cpt::tukey_depth(u->x, X).depth >= r);
        }
    }
}

TEST_CASE("both tverberg searches agree on existence", "[tverberg]")
{
    cpt::RationalSampler rng(8);
    for (int trial = 0; trial < 60; ++trial)
    {
        const int d = static_cast<int>(rng.uniform_int(1, 2));
        const int n = static_cast<int>(rng.uniform_int(2, 6));
        const int r = static_cast<int>(rng.uniform_int(2, 3));
        const auto X = grid_config(d, n, 2, rng);
        const auto a = cpt::tverberg_partition(X, r);
        const auto b = cpt::tverberg_by_candidates(X, r);
        CHECK(a.has_value() == b.has_value());
        if (a)
            CHECK(cpt::verify_tverberg(*a, X));
        if (b)
            CHECK(cpt::verify_tverberg(*b, X));
    }
}

TEST_CASE("centerpoints", "[centerpoint]")
{
    const auto X = line({0, 1, 2});
    const auto c = cpt::centerpoint(X, 2);
    REQUIRE(c);
    CHECK(c->x == vec({1}));
    CHECK(c->depth >= 2);

    const auto s = cpt::centerpoint(square(), 2);
    REQUIRE(s);
    CHECK(s->x == vec({Rational(1, 2), Rational(1, 2)}));

    const auto first = cpt::centerpoint(square(), 1);
    REQUIRE(first);
    CHECK(first->x == square().point(0));
    CHECK(first->depth >= 1);

    cpt::RationalSampler rng(5);
    for (int trial = 0; trial < 10; ++trial)
    {
        const auto Y = PointConfig(2, rng.points(7, 2));
        const auto cp = cpt::centerpoint(Y, 3);
        REQUIRE(cp);
        CHECK(cp->depth >= 3);
    }
}

TEST_CASE("reduction plans", "[reduction]")
{
    auto p = cpt::reduction_plan(2, 1);
    CHECK(p.k == 1);
    CHECK(p.R == 2);

    p = cpt::reduction_plan(4, 1);
    CHECK(p.k == 2);
    CHECK(p.R == 7);
    CHECK(p.m == 6);
    CHECK(p.M == 13);
    CHECK(p.k * (p.r - 1) * p.d + p.k + p.R == 15);

    p = cpt::reduction_plan(6, 1);
    CHECK(p.k == 2);
    CHECK(p.R == 11);
    CHECK(p.M == 21);

    for (int r = 2; r <= 12; ++r)
        for (int d = 1; d <= 4; ++d)
        {
            const auto q = cpt::reduction_plan(r, d);
            CHECK(oracle::is_prime(q.R));
            CHECK(q.M + 1 == q.k * (q.m + 1));
            CHECK(q.k * (q.r - 1) * q.d + q.k + q.R == q.M + 2);
            for (int smaller = 1; smaller < q.k; ++smaller)
                CHECK_FALSE(oracle::is_prime(smaller * (r - 1) + 1));
        }
    CHECK_THROWS_AS(cpt::reduction_plan(1, 1), std::invalid_argument);
    CHECK_FALSE(cpt::plan_identities_hold({4, 2, 7, 1, 6, 14}));
}

TEST_CASE("central point from the lifted Tverberg partition", "[reduction]")
{
    SECTION("seven points on a line, r = 4")
    {
        const auto X = line({0, 1, 2, 3, 4, 5, 6});
        const auto red = cpt::reduce_central_from_tverberg(X, 4);
        CHECK(red.plan.k == 2);
        CHECK(red.lift.size() == 14);
        CHECK(red.upstairs.blocks.size() == 7);
        CHECK(red.upstairs.x == vec({3}));
        CHECK(red.depth.depth >= 4);
    }
    SECTION("five points on a line, r = 3")
    {
        const auto red = cpt::reduce_central_from_tverberg(line({0, 1, 2, 3, 4}), 3);
        CHECK(red.plan.k == 1);
        CHECK(red.upstairs.x == vec({2}));
        CHECK(red.depth.depth >= 3);
    }
    SECTION("r = 2 is a Radon partition")
    {
        const auto red = cpt::reduce_central_from_tverberg(square(), 2);
        CHECK(red.plan.k == 1);
        CHECK(red.upstairs.blocks.size() == 2);
        CHECK(red.depth.depth >= 2);
    }
    SECTION("random configurations")
    {
        cpt::RationalSampler rng(99);
        for (int r : {4, 6})
            for (int trial = 0; trial < 3; ++trial)
            {
                const int n = 2 * (r - 1) + 1;
                const auto X = PointConfig(1, rng.points(n, 1));
                const auto red = cpt::reduce_central_from_tverberg(X, r);
                CHECK(red.depth.depth >= r);
                CHECK(cpt::hull_membership_depth(red.upstairs.x, X, r));
                CHECK(red.depth.depth == oracle::depth_on_line(red.upstairs.x(0), values_on_line(X)));
            }
        for (int trial = 0; trial < 3; ++trial)
        {
            const auto X = PointConfig(2, rng.points(7, 2));
            CHECK(cpt::reduce_central_from_tverberg(X, 3).depth.depth >= 3);
        }
    }
    SECTION("wrong size is rejected")
    {
        CHECK_THROWS_AS(cpt::reduce_central_from_tverberg(line({0, 1, 2}), 4), std::invalid_argument);
    }
}
