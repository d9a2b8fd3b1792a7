/**
 * Exact Tukey depth, centerpoints and Tverberg partitions of small rational
 * point configurations, and the reduction of the central point theorem to
 * Tverberg's theorem through a k-fold lifted configuration.
 *
 * Every search runs in a fixed canonical order, so results depend only on
 * the input and not on timing or thread count. Halfspaces are closed.
 */

#ifndef CPT_CENTERPOINT_HPP
#define CPT_CENTERPOINT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cpt/rational.hpp"

namespace cpt {

/** Points are the columns of `points`; the label of a point is its column index. */
struct PointConfig
{
    int d = 0;
    PointMatrix points;

    PointConfig() = default;
    PointConfig(int dim, PointMatrix pts);
    PointConfig(int dim, const std::vector<Point>& pts);

    int size() const { return static_cast<int>(points.cols()); }
    Point point(int label) const { return points.col(label); }
};

/** The closed halfspace {y : normal . y <= offset}. */
struct Halfspace
{
    Point normal;
    Rational offset;

    bool contains(const Point& y) const { return normal.dot(y) <= offset; }
};

struct DepthCertificate
{
    Point x;
    int depth = 0;
    Halfspace witness;               // contains x and exactly `depth` points
    std::vector<int> separated;      // a largest subset strictly separable from x
};

struct TverbergCertificate
{
    std::vector<std::vector<int> > blocks;   // sorted labels; blocks ordered by smallest label
    Point x;
    std::vector<VectorX<Rational> > weights; // weights[i][j] goes with blocks[i][j]
};

struct ReductionPlan
{
    int r = 0;
    int k = 0;
    int R = 0;
    int d = 0;
    int m = 0;
    int M = 0;
};

/** Number of points of X in the closed halfspace. */
int count_in(const Halfspace& H, const PointConfig& X);

/**
 * n minus the size of the largest subset strictly separable from x. Subsets
 * strictly separable from a point are closed under taking subsets, so the
 * search grows separable sets one label at a time.
 */
DepthCertificate tukey_depth(const Point& x, const PointConfig& X);

/** x lies in conv F for every F of exactly q labels (false for q = 0). */
bool hull_membership_depth(const Point& x, const PointConfig& X, int q);

/**
 * Checks that the blocks partition 0..n-1 and that every weight vector is
 * convex and reproduces x exactly.
 */
bool verify_tverberg(const TverbergCertificate& cert, const PointConfig& X);

/**
 * First partition into r nonempty blocks, in restricted-growth-string order,
 * whose convex hulls share a point. Prefixes are pruned when x in
 * conv(B_i + unassigned) is already infeasible for all blocks together.
 */
std::optional<TverbergCertificate> tverberg_partition(const PointConfig& X, int r);

/**
 * Some partition into r blocks with a common point, found by searching
 * candidate intersection points instead of partitions. Complete: every
 * nonempty intersection of hulls of disjoint sets has a vertex cut out by at
 * most d affine spans of disjoint subsets of at most d points each, and at
 * such a candidate r disjoint minimal subsets with the candidate in their
 * hulls are packed by depth-first search. Unused labels join the first
 * block. Returns nullopt if no partition exists.
 */
std::optional<TverbergCertificate> tverberg_by_candidates(const PointConfig& X, int r);

/** r = 1 gives the first point; otherwise the common point of tverberg_partition. */
std::optional<DepthCertificate> centerpoint(const PointConfig& X, int r);

/** Smallest k >= 1 with R = k(r-1)+1 prime. Throws VerificationFailure if the identities fail. */
ReductionPlan reduction_plan(int r, int d);

/** M+1 = k(m+1) and k(r-1)d + k + R = M+2. */
bool plan_identities_hold(const ReductionPlan& plan);

struct ReductionResult
{
    ReductionPlan plan;
    std::vector<int> lift;            // lifted label -> label of X
    TverbergCertificate upstairs;     // R blocks of lifted labels
    DepthCertificate depth;           // for the common point, on X
};

/**
 * Lifts X to k copies of each point, finds an R-block Tverberg partition of
 * the lift, and checks for its common point x that the preimage of every
 * (d(r-1)+1)-subset F contains a block and that x lies in conv F. Throws
 * VerificationFailure if either check fails or no partition is found.
 */
ReductionResult reduce_central_from_tverberg(const PointConfig& X, int r);

}   // namespace cpt

#endif
