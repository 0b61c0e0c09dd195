#ifndef HKIT_RATIONAL_HPP
#define HKIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hkit {

// Exact arbitrary-precision scalars. GMP keeps rationals canonical
// (lowest terms, positive denominator), which is exactly the invariant
// we need everywhere.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// A point or direction in R^d.
using Vec = std::vector<Rational>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Doubles are dyadic rationals, so this conversion is exact.
Rational rational_from_double(double x);

// Accepts "p/q", "p", and (exactly) decimal-free integer strings.
Rational parse_rational(const std::string& s);

// Canonical rendering: "p" when integral, else "p/q".
std::string rational_to_string(const Rational& q);

// Exact square root when the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// --- small vector helpers ---------------------------------------------------

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);
Vec negate(const Vec& a);
bool is_zero(const Vec& a);

Rational norm1(const Vec& a);
Rational norm_inf(const Vec& a);
Rational norm2_sq(const Vec& a);

std::vector<double> to_doubles(const Vec& a);
Vec from_doubles(const std::vector<double>& a);

// Lexicographic order; used for canonical sorting and dedup of exact points.
int lex_compare(const Vec& a, const Vec& b);

}  // namespace hkit

#endif
