#include "cpt/centerpoint.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "cpt/exact_lp.hpp"
#include "cpt/verification.hpp"

namespace cpt {

namespace {

PointMatrix columns(const PointConfig& X, const std::vector<int>& labels)
{
    PointMatrix out(X.d, static_cast<Eigen::Index>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j)
        out.col(static_cast<Eigen::Index>(j)) = X.points.col(labels[j]);
    return out;
}

void check_dimension(const Point& x, const PointConfig& X)
{
    if (x.size() != X.d)
        throw std::invalid_argument("point of dimension " + std::to_string(x.size()) +
                                    " against a configuration in R^" + std::to_string(X.d));
}

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

}   // namespace

PointConfig::PointConfig(int dim, PointMatrix pts) : d(dim), points(std::move(pts))
{
    if (d < 1)
        throw std::invalid_argument("PointConfig: dimension must be at least 1");
    if (points.cols() > 0 && points.rows() != d)
        throw std::invalid_argument("PointConfig: points do not have dimension " + std::to_string(d));
    points.conservativeResize(d, points.cols());
}

PointConfig::PointConfig(int dim, const std::vector<Point>& pts) : d(dim)
{
    if (d < 1)
        throw std::invalid_argument("PointConfig: dimension must be at least 1");
    for (const auto& p : pts)
        if (p.size() != d)
            throw std::invalid_argument("PointConfig: points do not have dimension " + std::to_string(d));
    points = pts.empty() ? PointMatrix(d, 0) : as_columns(pts);
}

int count_in(const Halfspace& H, const PointConfig& X)
{
    int count = 0;
    for (int j = 0; j < X.size(); ++j)
        count += H.contains(X.point(j)) ? 1 : 0;
    return count;
}

DepthCertificate tukey_depth(const Point& x, const PointConfig& X)
{
    check_dimension(x, X);
    const int n = X.size();

    std::vector<std::vector<int> > level{{}};
    std::vector<int> best;
    std::optional<Separator<Rational> > best_separator;
    for (int s = 1; s <= n; ++s)
    {
        const std::set<std::vector<int> > known(level.begin(), level.end());
        std::vector<std::vector<int> > next;
        std::optional<Separator<Rational> > first;
        for (const auto& S : level)
        {
            for (int j = S.empty() ? 0 : S.back() + 1; j < n; ++j)
            {
                std::vector<int> T = S;
                T.push_back(j);
                bool subsets_separable = true;
                for (int drop = 0; drop + 1 < s && subsets_separable; ++drop)
                {
                    std::vector<int> sub = T;
                    sub.erase(sub.begin() + drop);
                    subsets_separable = known.contains(sub);
                }
                if (!subsets_separable)
                    continue;
                auto sep = strictly_separable(columns(X, T), x);
                if (!sep)
                    continue;
                if (!first)
                    first = std::move(sep);
                next.push_back(std::move(T));
            }
        }
        if (next.empty())
            break;
        best = next.front();
        best_separator = std::move(first);
        level = std::move(next);
    }

    DepthCertificate cert;
    cert.x = x;
    cert.depth = n - static_cast<int>(best.size());
    cert.separated = best;
    if (best_separator)
    {
        // Maximality: no point outside `best` lies strictly beyond the offset.
        cert.witness = Halfspace{best_separator->normal, best_separator->offset};
    }
    else
    {
        cert.witness = Halfspace{unit_vector(X.d, 0), x(0)};
    }
    if (!cert.witness.contains(x) || count_in(cert.witness, X) != cert.depth)
        throw std::logic_error("tukey_depth: witness halfspace does not realize the depth");
    return cert;
}

bool hull_membership_depth(const Point& x, const PointConfig& X, int q)
{
    check_dimension(x, X);
    if (q < 0 || q > X.size())
        throw std::invalid_argument("hull_membership_depth: subset size out of range");
    if (q == 0)
        return false;
    const bool escaped = detail::for_each_combination(X.size(), q, [&](const std::vector<int>& F) {
        return !in_convex_hull(x, columns(X, F)).has_value();
    });
    return !escaped;
}

bool verify_tverberg(const TverbergCertificate& cert, const PointConfig& X)
{
    if (cert.x.size() != X.d || cert.weights.size() != cert.blocks.size())
        return false;
    std::vector<int> seen(X.size(), 0);
    for (std::size_t i = 0; i < cert.blocks.size(); ++i)
    {
        const auto& block = cert.blocks[i];
        const auto& w = cert.weights[i];
        if (block.empty() || w.size() != static_cast<Eigen::Index>(block.size()))
            return false;
        Point combination = Point::Zero(X.d);
        Rational total = 0;
        for (std::size_t j = 0; j < block.size(); ++j)
        {
            if (block[j] < 0 || block[j] >= X.size() || w(j) < 0)
                return false;
            ++seen[block[j]];
            combination += w(j) * X.point(block[j]);
            total += w(j);
        }
        if (total != 1 || combination != cert.x)
            return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::optional<DepthCertificate> centerpoint(const PointConfig& X, int r)
{
    if (r < 1)
        throw std::invalid_argument("centerpoint: r must be positive");
    if (X.size() == 0)
        return std::nullopt;
    if (r == 1)
        return tukey_depth(X.point(0), X);
    const auto partition = tverberg_partition(X, r);
    if (!partition)
        return std::nullopt;
    return tukey_depth(partition->x, X);
}

bool plan_identities_hold(const ReductionPlan& p)
{
    return p.R == p.k * (p.r - 1) + 1 && is_prime(p.R) && p.m == (p.d + 1) * (p.r - 1) &&
           p.M == (p.R - 1) * (p.d + 1) + p.k - 1 && p.M + 1 == p.k * (p.m + 1) &&
           p.k * (p.r - 1) * p.d + p.k + p.R == p.M + 2 && (p.R - 1) * p.d + p.k + p.R == p.M + 2;
}

ReductionPlan reduction_plan(int r, int d)
{
    if (r < 2)
        throw std::invalid_argument("reduction_plan: r must be at least 2");
    if (d < 1)
        throw std::invalid_argument("reduction_plan: d must be at least 1");
    ReductionPlan plan;
    plan.r = r;
    plan.d = d;
    for (plan.k = 1; !is_prime(plan.k * (r - 1) + 1); ++plan.k)
        ;
    plan.R = plan.k * (r - 1) + 1;
    plan.m = (d + 1) * (r - 1);
    plan.M = (plan.R - 1) * (d + 1) + plan.k - 1;
    if (!plan_identities_hold(plan))
        throw VerificationFailure("reduction plan identities fail for r=" + std::to_string(r) +
                                  ", d=" + std::to_string(d));
    return plan;
}

ReductionResult reduce_central_from_tverberg(const PointConfig& X, int r)
{
    ReductionResult out;
    out.plan = reduction_plan(r, X.d);
    const ReductionPlan& p = out.plan;
    if (X.size() != p.m + 1)
        throw std::invalid_argument("reduce_central_from_tverberg: expected " + std::to_string(p.m + 1) +
                                    " points, got " + std::to_string(X.size()));

    // Copy c of point j gets lifted label c(m+1) + j.
    PointMatrix lifted(X.d, p.M + 1);
    for (int c = 0; c < p.k; ++c)
        for (int j = 0; j <= p.m; ++j)
        {
            lifted.col(c * (p.m + 1) + j) = X.points.col(j);
            out.lift.push_back(j);
        }
    const PointConfig Y(X.d, lifted);

    const auto upstairs = p.k == 1 ? tverberg_partition(Y, p.R) : tverberg_by_candidates(Y, p.R);
    if (!upstairs)
        throw VerificationFailure("no " + std::to_string(p.R) + "-block Tverberg partition of the lifted configuration");
    out.upstairs = *upstairs;

    const int q = X.d * (r - 1) + 1;
    const bool every_face_hit = !detail::for_each_combination(X.size(), q, [&](const std::vector<int>& F) {
        std::vector<bool> in_F(X.size(), false);
        for (int v : F)
            in_F[v] = true;
        for (const auto& block : out.upstairs.blocks)
            if (std::all_of(block.begin(), block.end(), [&](int l) { return in_F[out.lift[l]]; }))
                return false;
        return true;
    });
    if (!every_face_hit)
        throw VerificationFailure("a face of dimension d(r-1) has a preimage containing no block");
    if (!hull_membership_depth(out.upstairs.x, X, q))
        throw VerificationFailure("the reduced point misses the hull of some " + std::to_string(q) + "-subset");

    out.depth = tukey_depth(out.upstairs.x, X);
    if (out.depth.depth < r)
        throw VerificationFailure("the reduced point has depth " + std::to_string(out.depth.depth) +
                                  " < " + std::to_string(r));
    return out;
}

}   // namespace cpt
