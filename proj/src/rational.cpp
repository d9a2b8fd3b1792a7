#include "cpt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cpt {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    using Integer = boost::multiprecision::mpz_int;
    const Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
    const Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& value)
{
    return value.str();
}

std::vector<std::string> to_strings(const Point& point)
{
    std::vector<std::string> out;
    out.reserve(point.size());
    for (Eigen::Index i = 0; i < point.size(); ++i)
        out.push_back(to_string(point(i)));
    return out;
}

Point parse_point(const std::vector<std::string>& coordinates)
{
    Point p(static_cast<Eigen::Index>(coordinates.size()));
    for (std::size_t i = 0; i < coordinates.size(); ++i)
        p(static_cast<Eigen::Index>(i)) = parse_rational(coordinates[i]);
    return p;
}

PointMatrix as_columns(const std::vector<Point>& points)
{
    if (points.empty())
        return PointMatrix(0, 0);
    const Eigen::Index dim = points.front().size();
    PointMatrix m(dim, static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j)
    {
        if (points[j].size() != dim)
            throw std::invalid_argument("as_columns: points of differing dimension");
        m.col(static_cast<Eigen::Index>(j)) = points[j];
    }
    return m;
}

Point unit_vector(Eigen::Index dim, Eigen::Index i)
{
    Point e = Point::Zero(dim);
    e(i) = 1;
    return e;
}

bool lex_less(const Point& a, const Point& b)
{
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i)
    {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return a.size() < b.size();
}

}   // namespace cpt
