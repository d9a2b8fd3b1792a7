#include "cpt/waist.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "cpt/exact_lp.hpp"
#include "cpt/parallel.hpp"
#include "cpt/verification.hpp"

namespace cpt {

namespace {

Rational floor_of(const Rational& x)
{
    const boost::multiprecision::mpz_int num = numerator(x);
    const boost::multiprecision::mpz_int den = denominator(x);
    boost::multiprecision::mpz_int q = num / den;   // truncates toward zero
    if (num < 0 && q * den != num)
        q -= 1;
    return Rational(q);
}

void check_in_simplex(const Point& y)
{
    Rational sum = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i)
    {
        if (y(i) < 0)
            throw std::invalid_argument("point has a negative barycentric coordinate");
        sum += y(i);
    }
    if (sum != 1 || y.size() < 1)
        throw std::invalid_argument("barycentric coordinates do not sum to 1");
}

}   // namespace

HPolytopeBody::HPolytopeBody(MatrixX<Rational> A, VectorX<Rational> b) : A_(std::move(A)), b_(std::move(b))
{
    if (A_.rows() != b_.size() || A_.cols() < 1)
        throw std::invalid_argument("HPolytopeBody: A and b do not match");
    const Eigen::Index n = A_.cols();

    // Full dimension: max t with A y + t <= b, t <= 1, must be positive.
    LinearSystem<Rational> margin(n + 1);
    for (Eigen::Index i = 0; i < A_.rows(); ++i)
    {
        VectorX<Rational> row(n + 1);
        row.head(n) = A_.row(i).transpose();
        row(n) = 1;
        margin.add_less_equal(row, b_(i));
    }
    margin.add_upper_bound(n, Rational(1));
    const auto interior = lp_maximize(margin, VectorX<Rational>(unit_vector(n + 1, n)));
    if (interior.status != LpStatus::Optimal || interior.value <= 0)
        throw std::invalid_argument("HPolytopeBody: body is empty or has empty interior");

    LinearSystem<Rational> body(n);
    for (Eigen::Index i = 0; i < A_.rows(); ++i)
        body.add_less_equal(VectorX<Rational>(A_.row(i).transpose()), b_(i));
    for (Eigen::Index i = 0; i < n; ++i)
        for (int sign : {1, -1})
        {
            const auto s = lp_maximize(body, VectorX<Rational>(Rational(sign) * unit_vector(n, i)));
            if (s.status != LpStatus::Optimal)
                throw std::invalid_argument("HPolytopeBody: body is unbounded");
        }

    origin_interior_ = (b_.array() > Rational(0)).all();
}

bool HPolytopeBody::contains(const Point& y) const
{
    return ((A_ * y - b_).array() <= Rational(0)).all();
}

HPolytopeBody standard_simplex_body(int n)
{
    if (n < 1)
        throw std::invalid_argument("standard_simplex_body: n must be at least 1");
    MatrixX<Rational> A = MatrixX<Rational>::Zero(n + 1, n);
    for (int i = 0; i < n; ++i)
    {
        A(i, i) = -(n + 1);
        A(n, i) = n + 1;
    }
    return HPolytopeBody(std::move(A), VectorX<Rational>::Ones(n + 1));
}

Point to_simplex_chart(const Point& barycentric)
{
    const Eigen::Index n = barycentric.size() - 1;
    if (n < 1)
        throw std::invalid_argument("to_simplex_chart: need at least two coordinates");
    return barycentric.head(n).array() - Rational(1, n + 1);
}

CoverCertificate min_cover_homothety(const std::vector<Point>& S, const HPolytopeBody& K)
{
    if (S.empty())
        throw std::invalid_argument("min_cover_homothety: empty point set");
    const Eigen::Index n = K.dim();
    const MatrixX<Rational>& A = K.A();
    const VectorX<Rational>& b = K.b();

    // Variables (delta, t). A s - A t - delta b <= 0 for every s, delta >= 0.
    LinearSystem<Rational> sys(n + 1);
    for (const auto& s : S)
    {
        if (s.size() != n)
            throw std::invalid_argument("min_cover_homothety: point of the wrong dimension");
        const VectorX<Rational> As = A * s;
        for (Eigen::Index i = 0; i < A.rows(); ++i)
        {
            VectorX<Rational> row(n + 1);
            row(0) = -b(i);
            row.tail(n) = -A.row(i).transpose();
            sys.add_less_equal(row, Rational(-As(i)));
        }
    }
    sys.add_lower_bound(0, Rational(0));

    const VectorX<Rational> objective = unit_vector(n + 1, 0);
    const auto sol = lp_minimize(sys, objective);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("min_cover_homothety: covering LP is feasible and bounded below");
    if (!certifies_lower_bound(sys, objective, sol.multipliers, sol.value))
        throw std::logic_error("min_cover_homothety: dual certificate does not verify");

    CoverCertificate cert;
    cert.delta = sol.value;
    cert.t = sol.point.tail(n);
    cert.dual = sol.multipliers;
    std::set<int> facets;
    for (std::size_t p = 0; p < S.size(); ++p)
    {
        const VectorX<Rational> lhs = A * (S[p] - cert.t);
        for (Eigen::Index i = 0; i < A.rows(); ++i)
        {
            if (lhs(i) > cert.delta * b(i))
                throw std::logic_error("min_cover_homothety: optimal translate does not cover");
            if (lhs(i) == cert.delta * b(i))
            {
                cert.tight.emplace_back(static_cast<int>(p), static_cast<int>(i));
                facets.insert(static_cast<int>(i));
            }
        }
    }
    cert.tight_facets.assign(facets.begin(), facets.end());
    return cert;
}

FacetTouching facet_touching_check(const std::vector<Point>& S)
{
    if (S.empty())
        throw std::invalid_argument("facet_touching_check: empty point set");
    const Eigen::Index n = S.front().size() - 1;
    std::vector<Point> chart;
    std::vector<bool> touched(n + 1, false);
    for (const auto& y : S)
    {
        if (y.size() != n + 1)
            throw std::invalid_argument("facet_touching_check: points of different dimensions");
        check_in_simplex(y);
        for (Eigen::Index i = 0; i <= n; ++i)
            if (y(i) == 0)
                touched[i] = true;
        chart.push_back(to_simplex_chart(y));
    }

    FacetTouching out;
    out.touches = std::all_of(touched.begin(), touched.end(), [](bool t) { return t; });
    out.cover = min_cover_homothety(chart, standard_simplex_body(static_cast<int>(n)));
    if (out.touches && out.cover.delta < 1)
        throw VerificationFailure("a facet-touching set is covered by a smaller homothet (delta = " +
                                  to_string(out.cover.delta) + ")");
    return out;
}

std::vector<Point> simplex_grid(int n, int N)
{
    if (n < 0 || N < 1)
        throw std::invalid_argument("simplex_grid: need n >= 0 and N >= 1");
    std::vector<Point> out;
    std::vector<int> parts(n + 1, 0);
    auto fill = [&](auto&& self, int i, int left) -> void {
        if (i == n)
        {
            parts[n] = left;
            Point y(n + 1);
            for (int j = 0; j <= n; ++j)
                y(j) = Rational(parts[j], N);
            out.push_back(std::move(y));
            return;
        }
        for (int v = 0; v <= left; ++v)
        {
            parts[i] = v;
            self(self, i + 1, left - v);
        }
    };
    fill(fill, 0, N);
    return out;
}

FiberReport fiber_width_demo(const PLMapSpec& f, int density, int jobs)
{
    if (density < 1)
        throw std::invalid_argument("fiber_width_demo: density must be positive");
    FiberReport report;
    report.n = f.source_dim();
    report.k = f.target.dim();
    report.density = density;
    if (report.n < 1 || report.k > report.n - 1)
        throw std::invalid_argument("fiber_width_demo: target dimension must be at most n-1");

    std::map<std::vector<Rational>, std::vector<Point> > groups;
    for (const auto& y : simplex_grid(report.n, density))
    {
        const Point image = pl_evaluate(f, y);
        std::vector<Rational> cell;
        for (Eigen::Index i = 0; i < image.size(); ++i)
            cell.push_back(floor_of(image(i) * density));
        groups[cell].push_back(to_simplex_chart(y));
    }

    const HPolytopeBody K = standard_simplex_body(report.n);
    std::vector<std::pair<std::vector<Rational>, std::vector<Point> > > work(groups.begin(), groups.end());
    report.cells = parallel_map<FiberCell>(work.size(), jobs, [&](std::size_t i) {
        return FiberCell{work[i].first, work[i].second.size(), min_cover_homothety(work[i].second, K)};
    });
    report.max_delta = 0;
    for (const auto& c : report.cells)
        report.max_delta = std::max(report.max_delta, c.cover.delta);
    return report;
}

}   // namespace cpt
