#pragma once
#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace slicewb {

/// Exact scalar. GMP keeps every mpq_class canonical (lowest terms, q > 0)
/// as long as results come out of the arithmetic operators.
using Rational = mpq_class;

/// p/q in canonical form. mpq_class(p, q) skips canonicalization and GMP
/// arithmetic on non-canonical operands is undefined.
inline Rational ratio(const mpz_class& p, const mpz_class& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Serializes as "p/q" (always with an explicit denominator).
std::string to_string(const Rational& q);

/// Accepts "p/q", "p", and decimal literals such as "-1.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

template <class S>
concept ScalarKind = std::same_as<S, Rational> || std::same_as<S, double>;

template <ScalarKind S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_rational(const Rational& x) { return x; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
};

template <>
struct ScalarTraits<double> {
  static bool is_zero(double x) { return x == 0.0; }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
};

}  // namespace slicewb
