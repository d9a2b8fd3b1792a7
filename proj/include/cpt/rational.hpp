/**
 * Exact rational scalar and the dense Eigen types built on it.
 *
 * Every coordinate in the toolkit is a `Rational`; all geometric predicates
 * are decided exactly, never up to a tolerance.
 */

#ifndef CPT_RATIONAL_HPP
#define CPT_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace cpt {

// Expression templates are disabled so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Point = VectorX<Rational>;
using PointMatrix = MatrixX<Rational>;   // one point per column

/**
 * Parse "p/q", "p", or "-p/q". Throws std::invalid_argument on anything else,
 * including a zero denominator.
 */
Rational parse_rational(std::string_view text);

/** "p/q" in lowest terms, or "p" when the denominator is 1. */
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const Point& point);
Point parse_point(const std::vector<std::string>& coordinates);

/** Stack points as the columns of a matrix. All points must share a size. */
PointMatrix as_columns(const std::vector<Point>& points);

/** Standard basis vector e_i in R^dim. */
Point unit_vector(Eigen::Index dim, Eigen::Index i);

/** Lexicographic comparison, used wherever a canonical order of points is needed. */
bool lex_less(const Point& a, const Point& b);

}   // namespace cpt

#endif
