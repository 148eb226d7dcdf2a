#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "slicewb/multivector.hpp"

namespace slicewb {

inline constexpr int kMaxPolyVars = 12;

/// Exponent profile of a monomial. Unused trailing slots stay zero.
using Exponents = std::array<std::int16_t, kMaxPolyVars>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, highest degree first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse Laurent polynomial with R_m coefficients. Coefficients multiply
/// in written order, so products of polynomials are non-commutative.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, MultivectorQ, GradedLexGreater>;

  LaurentPoly() = default;
  LaurentPoly(int m, int nvars);

  static LaurentPoly constant(int nvars, const MultivectorQ& c);
  static LaurentPoly monomial(int nvars, const Exponents& e, const MultivectorQ& c);
  /// var^power with real coefficient 1.
  static LaurentPoly variable(int m, int nvars, int var, int power = 1);

  int dim() const { return m_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const MultivectorQ& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.m_ == b.m_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  LaurentPoly left_mul(const MultivectorQ& c) const;
  LaurentPoly right_mul(const MultivectorQ& c) const;

  /// Formal partial derivative; negative exponents follow the Laurent rule.
  LaurentPoly derivative(int var, int order = 1) const;
  /// Multiplies by var^power (power may be negative).
  LaurentPoly shift(int var, int power) const;

  std::optional<int> min_exponent(int var) const;
  std::optional<int> max_exponent(int var) const;
  /// True when every exponent is nonnegative.
  bool is_polynomial() const;
  /// True when every coefficient is a real scalar.
  bool is_real() const;

  /// Rebuilds the polynomial term by term; `fn` may drop a term by
  /// returning std::nullopt.
  LaurentPoly map_terms(
      const std::function<std::optional<std::pair<Exponents, MultivectorQ>>(const Exponents&, const MultivectorQ&)>&
          fn) const;

  template <ScalarKind S>
  Multivector<S> evaluate(std::span<const S> values) const;

  void check_same(const LaurentPoly& o) const;

 private:
  int m_ = 0;
  int nvars_ = 0;
  TermMap terms_;
};

template <ScalarKind S>
S integer_power(const S& x, int k) {
  if (k < 0) {
    if (ScalarTraits<S>::is_zero(x)) throw PoleError("negative power of zero");
    return S(S(1) / integer_power(x, -k));
  }
  S r = ScalarTraits<S>::from_int(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

template <ScalarKind S>
Multivector<S> LaurentPoly::evaluate(std::span<const S> values) const {
  if (static_cast<int>(values.size()) < nvars_) throw std::invalid_argument("LaurentPoly::evaluate: too few values");
  Multivector<S> out(m_);
  for (const auto& [e, c] : terms_) {
    S mon = ScalarTraits<S>::from_int(1);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (e[v] < 0 && ScalarTraits<S>::is_zero(values[v]))
        throw PoleError("evaluation of a Laurent term at a zero of variable " + std::to_string(v));
      mon *= integer_power(values[v], e[v]);
    }
    for (const auto& [b, q] : c.terms()) out.add_term(b, S(ScalarTraits<S>::from_rational(q) * mon));
  }
  return out;
}

}  // namespace slicewb
