/**
 * Smallest homothetic copy of a polytope K = {y : A y <= b} that covers a
 * finite point set, found exactly by linear programming, together with the
 * facet-touching bound for the standard simplex and a sampled fiber-width
 * experiment for PL maps from the simplex.
 */

#ifndef CPT_WAIST_HPP
#define CPT_WAIST_HPP

#include <utility>
#include <vector>

#include "cpt/rational.hpp"
#include "cpt/simplicial.hpp"

namespace cpt {

/**
 * A bounded polytope with nonempty interior in H-form. Construction checks
 * boundedness and full dimension by LP and throws std::invalid_argument
 * otherwise.
 */
class HPolytopeBody
{
    public:
        HPolytopeBody(MatrixX<Rational> A, VectorX<Rational> b);

        const MatrixX<Rational>& A() const { return A_; }
        const VectorX<Rational>& b() const { return b_; }
        int dim() const { return static_cast<int>(A_.cols()); }
        bool origin_interior() const { return origin_interior_; }
        bool contains(const Point& y) const;

    private:
        MatrixX<Rational> A_;
        VectorX<Rational> b_;
        bool origin_interior_ = false;
};

/**
 * The standard n-simplex in the chart z_i = y_i - 1/(n+1), i < n, which
 * drops the last barycentric coordinate and puts the barycenter at the
 * origin. Rows i < n are -(n+1) z_i <= 1, row n is (n+1) sum z <= 1, so row
 * i is the facet y_i = 0.
 */
HPolytopeBody standard_simplex_body(int n);

/** Barycentric coordinates (length n+1) to the chart above. */
Point to_simplex_chart(const Point& barycentric);

struct CoverCertificate
{
    Rational delta;
    Point t;                                  // S lies in delta K + t
    std::vector<std::pair<int, int> > tight;  // (point index, row) with equality
    std::vector<int> tight_facets;            // distinct rows in `tight`
    VectorX<Rational> dual;                   // certifies delta as a lower bound
};

/** min delta >= 0 such that A(s - t) <= delta b for all s in S, for some t. */
CoverCertificate min_cover_homothety(const std::vector<Point>& S, const HPolytopeBody& K);

struct FacetTouching
{
    bool touches = false;
    CoverCertificate cover;
};

/**
 * S in barycentric coordinates. Touches when every facet y_i = 0 contains a
 * point of S; then the minimal covering homothety must have delta >= 1, and
 * VerificationFailure is thrown if it does not. Points outside the simplex
 * throw std::invalid_argument.
 */
FacetTouching facet_touching_check(const std::vector<Point>& S);

struct FiberCell
{
    std::vector<Rational> cell;     // floor(density * y) per target coordinate
    std::size_t samples = 0;
    CoverCertificate cover;
};

struct FiberReport
{
    int n = 0;
    int k = 0;
    int density = 0;
    std::vector<FiberCell> cells;   // sorted by cell
    Rational max_delta;
};

/**
 * Samples the barycentric grid of denominator `density` in the source
 * simplex, groups samples by the target cell of their image, and computes
 * the covering homothety of each group in the simplex chart. This is
 * sampled evidence about fiber widths, not an exact fiber computation.
 * Requires dim(target) <= n - 1.
 */
FiberReport fiber_width_demo(const PLMapSpec& f, int density, int jobs = 1);

/** Barycentric points with denominator N in the n-simplex, in lex order. */
std::vector<Point> simplex_grid(int n, int N);

}   // namespace cpt

#endif
