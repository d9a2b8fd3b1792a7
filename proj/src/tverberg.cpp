#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "combinations.hpp"
#include "cpt/centerpoint.hpp"
#include "cpt/exact_lp.hpp"

namespace cpt {

namespace {

PointMatrix columns(const PointConfig& X, const std::vector<int>& labels)
{
    PointMatrix out(X.d, static_cast<Eigen::Index>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) = X.points.col(labels[j]);
    return out;
}

// Unique solution of A z = b, if there is exactly one.
std::optional<VectorX<Rational> > solve_unique(MatrixX<Rational> A, VectorX<Rational> b)
{
    const Eigen::Index rows = A.rows();
    const Eigen::Index cols = A.cols();
    Eigen::Index rank = 0;
    std::vector<Eigen::Index> pivot_col;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c)
    {
        Eigen::Index p = rank;
        while (p < rows && A(p, c) == 0)
            ++p;
        if (p == rows)
            return std::nullopt;   // free column
        A.row(p).swap(A.row(rank));
        std::swap(b(p), b(rank));
        const Rational inv = 1 / A(rank, c);
        A.row(rank) *= inv;
        b(rank) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i)
            if (i != rank && A(i, c) != 0)
            {
                const Rational f = A(i, c);
                A.row(i) -= f * A.row(rank);
                b(i) -= f * b(rank);
            }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < cols)
        return std::nullopt;
    for (Eigen::Index i = rank; i < rows; ++i)
        if (b(i) != 0)
            return std::nullopt;
    return VectorX<Rational>(b.head(cols));
}

// The point where the affine spans of `flats` meet, if it is a single point.
std::optional<Point> flats_meet(const PointConfig& X, const std::vector<std::vector<int> >& flats)
{
    const int d = X.d;
    Eigen::Index unknowns = d;
    for (const auto& S : flats)
        unknowns += static_cast<Eigen::Index>(S.size());
    const Eigen::Index rows = static_cast<Eigen::Index>(flats.size()) * (d + 1);
    MatrixX<Rational> A = MatrixX<Rational>::Zero(rows, unknowns);
    VectorX<Rational> b = VectorX<Rational>::Zero(rows);
    Eigen::Index row = 0;
    Eigen::Index col = d;
    for (const auto& S : flats)
    {
        // y - sum lambda_j p_j = 0, sum lambda_j = 1
        for (int i = 0; i < d; ++i)
        {
            A(row + i, i) = 1;
            for (std::size_t j = 0; j < S.size(); ++j)
                A(row + i, col + static_cast<Eigen::Index>(j)) = -X.points(i, S[j]);
        }
        for (std::size_t j = 0; j < S.size(); ++j)
            A(row + d, col + static_cast<Eigen::Index>(j)) = 1;
        b(row + d) = 1;
        row += d + 1;
        col += static_cast<Eigen::Index>(S.size());
    }
    const auto z = solve_unique(std::move(A), std::move(b));
    if (!z)
        return std::nullopt;
    return Point(z->head(d));
}

struct LexLess
{
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

// Points of X, and single points cut out by at most d spans of pairwise
// disjoint subsets of 2..d labels whose codimensions add up to at least d.
std::vector<Point> candidate_points(const PointConfig& X)
{
    const int n = X.size();
    const int d = X.d;
    std::set<Point, LexLess> found;
    for (int j = 0; j < n; ++j)
        found.insert(X.point(j));

    std::vector<std::vector<int> > flats;
    std::vector<bool> used(n, false);
    std::function<void(int, int)> extend = [&](int min_label, int codim) {
        if (codim >= d)
        {
            if (auto y = flats_meet(X, flats))
                found.insert(*y);
            return;
        }
        if (static_cast<int>(flats.size()) == d)
            return;
        for (int size = 2; size <= d; ++size)
        {
            detail::for_each_combination(n, size, [&](const std::vector<int>& S) {
                if (S.front() <= min_label)
                    return false;
                for (int v : S)
                    if (used[v])
                        return false;
                for (int v : S)
                    used[v] = true;
                flats.push_back(S);
                extend(S.front(), codim + d - size + 1);
                flats.pop_back();
                for (int v : S)
                    used[v] = false;
                return false;
            });
        }
    };
    extend(-1, 0);
    return {found.begin(), found.end()};
}

// Number of free labels above `after` in the sparser of the two closed
// coordinate halfspaces through x, minimized over coordinates. Every subset
// with x in its hull meets each such halfspace.
int halfspace_bound(const PointConfig& X, const Point& x, const std::vector<bool>& used, int after)
{
    int bound = X.size();
    for (int i = 0; i < X.d; ++i)
    {
        int above = 0;
        int below = 0;
        for (int j = after + 1; j < X.size(); ++j)
        {
            if (used[j])
                continue;
            above += X.points(i, j) >= x(i) ? 1 : 0;
            below += X.points(i, j) <= x(i) ? 1 : 0;
        }
        bound = std::min({bound, above, below});
    }
    return bound;
}

// Inclusion-minimal label sets of size at most d+1 whose hull contains x,
// in lexicographic order.
std::vector<std::vector<int> > minimal_hull_sets(const PointConfig& X, const Point& x)
{
    std::vector<std::vector<int> > good;
    for (int size = 1; size <= X.d + 1; ++size)
    {
        std::vector<std::vector<int> > layer;
        detail::for_each_combination(X.size(), size, [&](const std::vector<int>& S) {
            for (int i = 0; i < X.d; ++i)
            {
                bool above = false;
                bool below = false;
                for (int v : S)
                {
                    above = above || X.points(i, v) >= x(i);
                    below = below || X.points(i, v) <= x(i);
                }
                if (!above || !below)
                    return false;
            }
            for (const auto& g : good)
                if (std::includes(S.begin(), S.end(), g.begin(), g.end()))
                    return false;
            if (in_convex_hull(x, columns(X, S)))
                layer.push_back(S);
            return false;
        });
        good.insert(good.end(), layer.begin(), layer.end());
    }
    std::sort(good.begin(), good.end());
    return good;
}

// r pairwise disjoint sets from `good`, chosen with increasing first labels.
bool pack(const PointConfig& X, const Point& x, const std::vector<std::vector<int> >& good, int r,
          std::size_t start, std::vector<bool>& used, std::vector<std::vector<int> >& chosen)
{
    if (static_cast<int>(chosen.size()) == r)
        return true;
    const int after = chosen.empty() ? -1 : chosen.back().front();
    if (static_cast<int>(chosen.size()) + halfspace_bound(X, x, used, after) < r)
        return false;
    for (std::size_t g = start; g < good.size(); ++g)
    {
        const auto& S = good[g];
        if (S.front() <= after)
            continue;
        if (std::any_of(S.begin(), S.end(), [&](int v) { return used[v]; }))
            continue;
        for (int v : S)
            used[v] = true;
        chosen.push_back(S);
        if (pack(X, x, good, r, g + 1, used, chosen))
            return true;
        chosen.pop_back();
        for (int v : S)
            used[v] = false;
    }
    return false;
}

TverbergCertificate certificate_for(const PointConfig& X, const Point& x, std::vector<std::vector<int> > blocks)
{
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    TverbergCertificate cert;
    cert.x = x;
    for (const auto& b : blocks)
    {
        auto w = in_convex_hull(x, columns(X, b));
        if (!w)
            throw std::logic_error("tverberg: block hull lost the common point");
        cert.weights.push_back(*w);
    }
    cert.blocks = std::move(blocks);
    return cert;
}

}   // namespace

std::optional<TverbergCertificate> tverberg_partition(const PointConfig& X, int r)
{
    if (r < 1)
        throw std::invalid_argument("tverberg_partition: r must be positive");
    const int n = X.size();
    if (r > n)
        return std::nullopt;

    std::vector<int> block_of(n, -1);
    std::optional<TverbergCertificate> result;

    auto blocks_of_prefix = [&](int assigned, int opened) {
        std::vector<std::vector<int> > blocks(opened);
        for (int j = 0; j < assigned; ++j)
            blocks[block_of[j]].push_back(j);
        return blocks;
    };

    std::function<void(int, int)> visit = [&](int i, int opened) {
        if (n - i < r - opened)
            return;
        if (i == n)
        {
            const auto blocks = blocks_of_prefix(n, opened);
            std::vector<VPolytope<Rational> > hulls;
            for (const auto& b : blocks)
                hulls.push_back({columns(X, b)});
            auto common = polytopes_common_point(hulls);
            if (common.found)
                result = TverbergCertificate{blocks, common.point, common.weights};
            return;
        }
        if (i > 0)
        {
            // Each block can still absorb any unassigned label.
            auto blocks = blocks_of_prefix(i, opened);
            std::vector<int> rest;
            for (int j = i; j < n; ++j)
                rest.push_back(j);
            std::vector<VPolytope<Rational> > relaxed;
            for (auto& b : blocks)
            {
                b.insert(b.end(), rest.begin(), rest.end());
                relaxed.push_back({columns(X, b)});
            }
            if (opened < r)
                relaxed.push_back({columns(X, rest)});
            if (!polytopes_common_point(relaxed).found)
                return;
        }
        for (int b = 0; b <= std::min(opened, r - 1) && !result; ++b)
        {
            block_of[i] = b;
            visit(i + 1, std::max(opened, b + 1));
        }
        block_of[i] = -1;
    };
    visit(0, 0);
    return result;
}

std::optional<TverbergCertificate> tverberg_by_candidates(const PointConfig& X, int r)
{
    if (r < 1)
        throw std::invalid_argument("tverberg_by_candidates: r must be positive");
    const int n = X.size();
    if (r > n)
        return std::nullopt;

    std::vector<bool> none(n, false);
    for (const Point& x : candidate_points(X))
    {
        if (halfspace_bound(X, x, none, -1) < r)
            continue;
        const auto good = minimal_hull_sets(X, x);
        std::vector<bool> used(n, false);
        std::vector<std::vector<int> > chosen;
        if (!pack(X, x, good, r, 0, used, chosen))
            continue;
        for (int j = 0; j < n; ++j)
            if (!used[j])
                chosen.front().push_back(j);
        return certificate_for(X, x, std::move(chosen));
    }
    return std::nullopt;
}

}   // namespace cpt
