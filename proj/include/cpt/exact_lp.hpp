/**
 * Exact linear programming over an ordered field.
 *
 * The solver is a dense two-phase tableau simplex method with Bland's rule,
 * so it terminates without cycling on degenerate input. Every answer comes
 * with a certificate that can be checked independently of the solver:
 *
 * - feasible: a point satisfying every constraint exactly;
 * - infeasible: Farkas multipliers y with y >= 0 on inequality rows,
 *   y^T M = 0 and y^T rhs = -1 (a nonnegative combination reading 0 <= -1);
 * - optimal: dual multipliers l with l >= 0 on inequality rows and
 *   c + M^T l = 0, certifying the lower bound -l^T rhs, which equals the
 *   attained value;
 * - unbounded: a recession ray along which the objective decreases.
 *
 * All templates expect an exact field (in practice `cpt::Rational`).
 * Variables are free; sign constraints are ordinary rows.
 */

#ifndef CPT_EXACT_LP_HPP
#define CPT_EXACT_LP_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cpt/rational.hpp"

namespace cpt {

enum class Relation { LessEqual, Equal };

template <typename Scalar>
struct Constraint
{
    VectorX<Scalar> coefficients;
    Relation relation;
    Scalar rhs;
};

/**
 * A finite system of weak linear constraints in `n_vars` free variables.
 */
template <typename Scalar>
class LinearSystem
{
    public:
        explicit LinearSystem(Eigen::Index n_vars) : n_vars_(n_vars)
        {
            if (n_vars < 0)
                throw std::invalid_argument("LinearSystem: negative variable count");
        }

        Eigen::Index n_vars() const { return n_vars_; }
        Eigen::Index size() const { return static_cast<Eigen::Index>(rows_.size()); }
        const std::vector<Constraint<Scalar> >& constraints() const { return rows_; }

        LinearSystem& add(Constraint<Scalar> row)
        {
            if (row.coefficients.size() != n_vars_)
                throw std::invalid_argument("LinearSystem: coefficient vector has wrong length");
            rows_.push_back(std::move(row));
            return *this;
        }

        template <typename Derived>
        LinearSystem& add_less_equal(const Eigen::MatrixBase<Derived>& a, const Scalar& rhs)
        {
            return add({VectorX<Scalar>(a), Relation::LessEqual, rhs});
        }

        template <typename Derived>
        LinearSystem& add_greater_equal(const Eigen::MatrixBase<Derived>& a, const Scalar& rhs)
        {
            return add({VectorX<Scalar>(-a), Relation::LessEqual, Scalar(-rhs)});
        }

        template <typename Derived>
        LinearSystem& add_equal(const Eigen::MatrixBase<Derived>& a, const Scalar& rhs)
        {
            return add({VectorX<Scalar>(a), Relation::Equal, rhs});
        }

        /** x_i >= lo, written as the row -x_i <= -lo. */
        LinearSystem& add_lower_bound(Eigen::Index i, const Scalar& lo)
        {
            VectorX<Scalar> a = VectorX<Scalar>::Zero(n_vars_);
            a(i) = -1;
            return add({std::move(a), Relation::LessEqual, Scalar(-lo)});
        }

        LinearSystem& add_upper_bound(Eigen::Index i, const Scalar& hi)
        {
            VectorX<Scalar> a = VectorX<Scalar>::Zero(n_vars_);
            a(i) = 1;
            return add({std::move(a), Relation::LessEqual, hi});
        }

        bool is_satisfied_by(const VectorX<Scalar>& x) const
        {
            if (x.size() != n_vars_)
                return false;
            for (const auto& row : rows_)
            {
                const Scalar lhs = row.coefficients.dot(x);
                if (row.relation == Relation::Equal ? lhs != row.rhs : lhs > row.rhs)
                    return false;
            }
            return true;
        }

    private:
        Eigen::Index n_vars_;
        std::vector<Constraint<Scalar> > rows_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution
{
    LpStatus status = LpStatus::Infeasible;
    VectorX<Scalar> point;         // Optimal: attaining point
    Scalar value = 0;              // Optimal: objective value
    VectorX<Scalar> multipliers;   // Optimal: dual certificate; Infeasible: Farkas certificate
    VectorX<Scalar> ray;           // Unbounded: improving recession direction
};

template <typename Scalar>
struct Feasibility
{
    bool feasible = false;
    VectorX<Scalar> point;    // witness when feasible
    VectorX<Scalar> farkas;   // certificate when infeasible
};

/**
 * y proves infeasibility of `sys`: y >= 0 on inequality rows, y^T M = 0,
 * y^T rhs = -1.
 */
template <typename Scalar>
bool certifies_infeasibility(const LinearSystem<Scalar>& sys, const VectorX<Scalar>& y)
{
    if (y.size() != sys.size())
        return false;
    VectorX<Scalar> combo = VectorX<Scalar>::Zero(sys.n_vars());
    Scalar rhs = 0;
    for (Eigen::Index i = 0; i < sys.size(); ++i)
    {
        const auto& row = sys.constraints()[i];
        if (row.relation == Relation::LessEqual && y(i) < 0)
            return false;
        if (y(i) != 0)
        {
            combo += y(i) * row.coefficients;
            rhs += y(i) * row.rhs;
        }
    }
    return rhs == -1 && (sys.n_vars() == 0 || combo == VectorX<Scalar>::Zero(sys.n_vars()));
}

/**
 * l proves that `bound` is a lower bound of c^T x over `sys`: l >= 0 on
 * inequality rows, c + M^T l = 0 and -l^T rhs = bound.
 */
template <typename Scalar>
bool certifies_lower_bound(const LinearSystem<Scalar>& sys, const VectorX<Scalar>& objective,
                           const VectorX<Scalar>& l, const Scalar& bound)
{
    if (l.size() != sys.size() || objective.size() != sys.n_vars())
        return false;
    VectorX<Scalar> combo = objective;
    Scalar rhs = 0;
    for (Eigen::Index i = 0; i < sys.size(); ++i)
    {
        const auto& row = sys.constraints()[i];
        if (row.relation == Relation::LessEqual && l(i) < 0)
            return false;
        if (l(i) != 0)
        {
            combo += l(i) * row.coefficients;
            rhs += l(i) * row.rhs;
        }
    }
    return -rhs == bound && (sys.n_vars() == 0 || combo == VectorX<Scalar>::Zero(sys.n_vars()));
}

namespace detail {

/**
 * Dense tableau for  min c^T x  s.t.  sys,  with x = u - v split into
 * nonnegative parts, one slack per inequality row, and artificials only on
 * rows that cannot start with their slack basic.
 *
 * Row `p` of the tableau (past the constraint rows) holds reduced costs; its
 * last entry is minus the current objective value.
 */
template <typename Scalar>
class SimplexTableau
{
    public:
        explicit SimplexTableau(const LinearSystem<Scalar>& sys) : sys_(sys)
        {
            n_ = sys.n_vars();
            p_ = sys.size();
            Eigen::Index slacks = 0;
            Eigen::Index artificials = 0;
            for (const auto& row : sys.constraints())
            {
                if (row.relation == Relation::LessEqual)
                    ++slacks;
                if (row.relation == Relation::Equal || row.rhs < 0)
                    ++artificials;
            }
            slack_begin_ = 2 * n_;
            art_begin_ = slack_begin_ + slacks;
            cols_ = art_begin_ + artificials;

            t_ = MatrixX<Scalar>::Zero(p_ + 1, cols_ + 1);
            sign_.resize(p_);
            basis_.resize(p_);
            initial_.resize(p_);
            slack_of_row_.assign(p_, -1);

            Eigen::Index next_slack = slack_begin_;
            Eigen::Index next_art = art_begin_;
            for (Eigen::Index i = 0; i < p_; ++i)
            {
                const auto& row = sys.constraints()[i];
                const bool flip = row.rhs < 0;
                sign_[i] = flip ? -1 : 1;
                const Scalar s(sign_[i]);
                t_.row(i).head(n_) = s * row.coefficients.transpose();
                t_.row(i).segment(n_, n_) = -s * row.coefficients.transpose();
                t_(i, cols_) = s * row.rhs;
                if (row.relation == Relation::LessEqual)
                {
                    slack_of_row_[i] = next_slack;
                    t_(i, next_slack++) = s;
                }
                if (row.relation == Relation::Equal || flip)
                {
                    t_(i, next_art) = 1;
                    basis_[i] = next_art++;
                }
                else
                {
                    basis_[i] = slack_of_row_[i];
                }
                initial_[i] = basis_[i];
            }
        }

        LpSolution<Scalar> minimize(const VectorX<Scalar>& objective)
        {
            LpSolution<Scalar> out;
            if (art_begin_ < cols_)
            {
                std::vector<Scalar> phase_one(cols_, Scalar(0));
                for (Eigen::Index j = art_begin_; j < cols_; ++j)
                    phase_one[j] = 1;
                load_costs(phase_one);
                run(cols_);   // phase one is bounded below by zero
                const Scalar infeasibility = -t_(p_, cols_);
                if (infeasibility > 0)
                {
                    out.status = LpStatus::Infeasible;
                    out.multipliers = farkas(phase_one, infeasibility);
                    return out;
                }
                drive_out_artificials();
            }

            std::vector<Scalar> costs(cols_, Scalar(0));
            for (Eigen::Index k = 0; k < n_; ++k)
            {
                costs[k] = objective(k);
                costs[n_ + k] = -objective(k);
            }
            load_costs(costs);
            const Eigen::Index unbounded_col = run(art_begin_);
            if (unbounded_col >= 0)
            {
                out.status = LpStatus::Unbounded;
                out.ray = ray(unbounded_col);
                return out;
            }
            out.status = LpStatus::Optimal;
            out.point = primal();
            out.value = objective.dot(out.point);
            out.multipliers = duals(costs);
            return out;
        }

    private:
        void load_costs(const std::vector<Scalar>& costs)
        {
            t_.row(p_).setZero();
            for (Eigen::Index j = 0; j < cols_; ++j)
                t_(p_, j) = costs[j];
            for (Eigen::Index i = 0; i < p_; ++i)
            {
                const Scalar& cb = costs[basis_[i]];
                if (cb != 0)
                    t_.row(p_) -= cb * t_.row(i);
            }
        }

        void pivot(Eigen::Index r, Eigen::Index c)
        {
            const Scalar inv = Scalar(1) / t_(r, c);
            t_.row(r) *= inv;
            for (Eigen::Index i = 0; i <= p_; ++i)
            {
                if (i == r || t_(i, c) == 0)
                    continue;
                const Scalar f = t_(i, c);
                t_.row(i) -= f * t_.row(r);
            }
            basis_[r] = c;
        }

        /**
         * Bland's rule over columns [0, limit). Returns -1 at optimality, or
         * the entering column whose ratio test found no bound.
         */
        Eigen::Index run(Eigen::Index limit)
        {
            for (;;)
            {
                Eigen::Index enter = -1;
                for (Eigen::Index j = 0; j < limit; ++j)
                {
                    if (t_(p_, j) < 0)
                    {
                        enter = j;
                        break;
                    }
                }
                if (enter < 0)
                    return -1;

                Eigen::Index leave = -1;
                Scalar best;
                for (Eigen::Index i = 0; i < p_; ++i)
                {
                    if (t_(i, enter) <= 0)
                        continue;
                    const Scalar ratio = t_(i, cols_) / t_(i, enter);
                    if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave]))
                    {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave < 0)
                    return enter;
                pivot(leave, enter);
            }
        }

        void drive_out_artificials()
        {
            for (Eigen::Index i = 0; i < p_; ++i)
            {
                if (basis_[i] < art_begin_)
                    continue;
                for (Eigen::Index j = 0; j < art_begin_; ++j)
                {
                    if (t_(i, j) != 0)
                    {
                        pivot(i, j);
                        break;
                    }
                }
                // A row with no structural entry left is redundant; its
                // artificial stays basic at zero and never re-enters.
            }
        }

        // y'_i = c_{init_i} - reduced_cost(init_i), read off the initial basis columns.
        VectorX<Scalar> flipped_duals(const std::vector<Scalar>& costs) const
        {
            VectorX<Scalar> y(p_);
            for (Eigen::Index i = 0; i < p_; ++i)
                y(i) = costs[initial_[i]] - t_(p_, initial_[i]);
            return y;
        }

        VectorX<Scalar> farkas(const std::vector<Scalar>& phase_one, const Scalar& infeasibility) const
        {
            VectorX<Scalar> y = flipped_duals(phase_one);
            for (Eigen::Index i = 0; i < p_; ++i)
                y(i) = -Scalar(sign_[i]) * y(i) / infeasibility;
            return y;
        }

        VectorX<Scalar> duals(const std::vector<Scalar>& costs) const
        {
            VectorX<Scalar> y = flipped_duals(costs);
            for (Eigen::Index i = 0; i < p_; ++i)
                y(i) = -Scalar(sign_[i]) * y(i);
            return y;
        }

        VectorX<Scalar> primal() const
        {
            VectorX<Scalar> x = VectorX<Scalar>::Zero(n_);
            for (Eigen::Index i = 0; i < p_; ++i)
            {
                if (basis_[i] < n_)
                    x(basis_[i]) += t_(i, cols_);
                else if (basis_[i] < 2 * n_)
                    x(basis_[i] - n_) -= t_(i, cols_);
            }
            return x;
        }

        VectorX<Scalar> ray(Eigen::Index enter) const
        {
            VectorX<Scalar> d = VectorX<Scalar>::Zero(n_);
            if (enter < n_)
                d(enter) += 1;
            else if (enter < 2 * n_)
                d(enter - n_) -= 1;
            for (Eigen::Index i = 0; i < p_; ++i)
            {
                if (basis_[i] < n_)
                    d(basis_[i]) -= t_(i, enter);
                else if (basis_[i] < 2 * n_)
                    d(basis_[i] - n_) += t_(i, enter);
            }
            return d;
        }

        const LinearSystem<Scalar>& sys_;
        Eigen::Index n_ = 0, p_ = 0, cols_ = 0, slack_begin_ = 0, art_begin_ = 0;
        MatrixX<Scalar> t_;
        std::vector<int> sign_;
        std::vector<Eigen::Index> basis_, initial_, slack_of_row_;
};

}   // namespace detail

template <typename Scalar>
LpSolution<Scalar> lp_minimize(const LinearSystem<Scalar>& sys, const VectorX<Scalar>& objective)
{
    if (objective.size() != sys.n_vars())
        throw std::invalid_argument("lp_minimize: objective has wrong length");
    detail::SimplexTableau<Scalar> tableau(sys);
    return tableau.minimize(objective);
}

/** Maximization by negation; on Optimal, `value` is the maximum and the
 *  multipliers certify the bound for the negated objective. */
template <typename Scalar>
LpSolution<Scalar> lp_maximize(const LinearSystem<Scalar>& sys, const VectorX<Scalar>& objective)
{
    LpSolution<Scalar> out = lp_minimize(sys, VectorX<Scalar>(-objective));
    if (out.status == LpStatus::Optimal)
        out.value = -out.value;
    return out;
}

template <typename Scalar>
Feasibility<Scalar> lp_feasible(const LinearSystem<Scalar>& sys)
{
    LpSolution<Scalar> sol = lp_minimize(sys, VectorX<Scalar>(VectorX<Scalar>::Zero(sys.n_vars())));
    Feasibility<Scalar> out;
    out.feasible = sol.status == LpStatus::Optimal;
    if (out.feasible)
        out.point = std::move(sol.point);
    else
        out.farkas = std::move(sol.multipliers);
    return out;
}

// ---------------------------------------------------------------------------
// Geometric queries
// ---------------------------------------------------------------------------

/**
 * Convex hull of finitely many points, one per column. No minimality of the
 * vertex list is required.
 */
template <typename Scalar>
struct VPolytope
{
    MatrixX<Scalar> vertices;

    Eigen::Index ambient_dim() const { return vertices.rows(); }
    Eigen::Index size() const { return vertices.cols(); }
};

/**
 * Convex weights w >= 0, sum w = 1, with points * w = p, or nullopt when p
 * lies outside the hull (an empty point set has an empty hull).
 */
template <typename Scalar>
std::optional<VectorX<Scalar> > in_convex_hull(const VectorX<Scalar>& p, const MatrixX<Scalar>& points)
{
    if (points.cols() > 0 && points.rows() != p.size())
        throw std::invalid_argument("in_convex_hull: dimension mismatch");
    const Eigen::Index k = points.cols();
    if (k == 0)
        return std::nullopt;
    LinearSystem<Scalar> sys(k);
    for (Eigen::Index j = 0; j < k; ++j)
        sys.add_lower_bound(j, Scalar(0));
    sys.add_equal(VectorX<Scalar>::Ones(k), Scalar(1));
    for (Eigen::Index i = 0; i < p.size(); ++i)
        sys.add_equal(points.row(i).transpose(), p(i));
    Feasibility<Scalar> f = lp_feasible(sys);
    if (!f.feasible)
        return std::nullopt;
    return f.point;
}

template <typename Scalar>
struct CommonPoint
{
    bool found = false;
    VectorX<Scalar> point;
    std::vector<VectorX<Scalar> > weights;   // per polytope, convex, reproducing `point`
    VectorX<Scalar> farkas;                  // when not found
};

/**
 * Encodes "x lies in every polytope" with variables (x, w^1, ..., w^k).
 * Exposed so that callers can check returned Farkas certificates.
 */
template <typename Scalar>
LinearSystem<Scalar> common_point_system(const std::vector<VPolytope<Scalar> >& polytopes)
{
    if (polytopes.empty())
        throw std::invalid_argument("polytopes_common_point: empty list");
    const Eigen::Index d = polytopes.front().ambient_dim();
    Eigen::Index n = d;
    for (const auto& P : polytopes)
    {
        if (P.ambient_dim() != d)
            throw std::invalid_argument("polytopes_common_point: ambient dimension mismatch");
        if (P.size() == 0)
            throw std::invalid_argument("polytopes_common_point: polytope without vertices");
        n += P.size();
    }
    LinearSystem<Scalar> sys(n);
    Eigen::Index offset = d;
    for (const auto& P : polytopes)
    {
        const Eigen::Index k = P.size();
        for (Eigen::Index j = 0; j < k; ++j)
            sys.add_lower_bound(offset + j, Scalar(0));
        VectorX<Scalar> sum = VectorX<Scalar>::Zero(n);
        sum.segment(offset, k).setOnes();
        sys.add_equal(sum, Scalar(1));
        for (Eigen::Index i = 0; i < d; ++i)
        {
            VectorX<Scalar> row = VectorX<Scalar>::Zero(n);
            row.segment(offset, k) = P.vertices.row(i).transpose();
            row(i) = -1;
            sys.add_equal(row, Scalar(0));
        }
        offset += k;
    }
    return sys;
}

template <typename Scalar>
CommonPoint<Scalar> polytopes_common_point(const std::vector<VPolytope<Scalar> >& polytopes)
{
    const LinearSystem<Scalar> sys = common_point_system(polytopes);
    Feasibility<Scalar> f = lp_feasible(sys);
    CommonPoint<Scalar> out;
    out.found = f.feasible;
    if (!f.feasible)
    {
        out.farkas = std::move(f.farkas);
        return out;
    }
    const Eigen::Index d = polytopes.front().ambient_dim();
    out.point = f.point.head(d);
    Eigen::Index offset = d;
    for (const auto& P : polytopes)
    {
        out.weights.push_back(f.point.segment(offset, P.size()));
        offset += P.size();
    }
    return out;
}

/**
 * An affine functional with normal . y > offset on every point of B and
 * normal . x < offset.
 */
template <typename Scalar>
struct Separator
{
    VectorX<Scalar> normal;
    Scalar offset;
    Scalar margin;   // optimal margin under the unit-box normalization
};

/**
 * Strict separation of the point set B (columns) from x. Decided by
 * maximizing a margin t subject to a.b - beta >= t on B, a.x - beta <= -t,
 * with (a, beta) in the unit box and t <= 1; separable iff t* > 0.
 */
template <typename Scalar>
std::optional<Separator<Scalar> > strictly_separable(const MatrixX<Scalar>& B, const VectorX<Scalar>& x)
{
    if (B.cols() > 0 && B.rows() != x.size())
        throw std::invalid_argument("strictly_separable: dimension mismatch");
    const Eigen::Index d = x.size();
    const Eigen::Index n = d + 2;   // a (d), beta, t
    LinearSystem<Scalar> sys(n);
    for (Eigen::Index j = 0; j < B.cols(); ++j)
    {
        // -(a.b - beta) + t <= 0
        VectorX<Scalar> row(n);
        row.head(d) = -B.col(j);
        row(d) = 1;
        row(d + 1) = 1;
        sys.add_less_equal(row, Scalar(0));
    }
    {
        // a.x - beta + t <= 0
        VectorX<Scalar> row(n);
        row.head(d) = x;
        row(d) = -1;
        row(d + 1) = 1;
        sys.add_less_equal(row, Scalar(0));
    }
    for (Eigen::Index i = 0; i <= d; ++i)
    {
        sys.add_upper_bound(i, Scalar(1));
        sys.add_lower_bound(i, Scalar(-1));
    }
    sys.add_upper_bound(d + 1, Scalar(1));

    VectorX<Scalar> objective = VectorX<Scalar>::Zero(n);
    objective(d + 1) = 1;
    LpSolution<Scalar> sol = lp_maximize(sys, objective);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("strictly_separable: margin LP is always feasible and bounded");
    if (sol.value <= 0)
        return std::nullopt;
    return Separator<Scalar>{sol.point.head(d), sol.point(d), sol.value};
}

}   // namespace cpt

#endif
