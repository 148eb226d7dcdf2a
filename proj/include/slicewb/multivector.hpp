#pragma once
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "slicewb/blade.hpp"
#include "slicewb/errors.hpp"
#include "slicewb/rational.hpp"

namespace slicewb {

/// Element of the Clifford algebra R_m (e_i e_j + e_j e_i = -2 delta_ij),
/// stored sparsely as blade -> coefficient. Zero coefficients are never
/// stored, so two multivectors are equal iff their term maps are equal.
template <ScalarKind S>
class Multivector {
 public:
  using Traits = ScalarTraits<S>;
  using TermMap = std::map<Blade, S>;

  Multivector() = default;
  explicit Multivector(int m) : m_(m) { check_algebra_dim(m); }

  static Multivector scalar(int m, const S& v) {
    Multivector x(m);
    x.add_term(0, v);
    return x;
  }
  static Multivector basis(int m, Blade b, const S& v = Traits::from_int(1)) {
    Multivector x(m);
    if (b >> m) throw std::invalid_argument("blade outside R_" + std::to_string(m));
    x.add_term(b, v);
    return x;
  }
  static Multivector generator(int m, int i) { return basis(m, slicewb::generator(i)); }

  int dim() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  std::size_t size() const { return terms_.size(); }

  S coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }
  S scalar_part() const { return coeff(0); }

  void add_term(Blade b, const S& v) {
    if (Traits::is_zero(v)) return;
    auto [it, inserted] = terms_.try_emplace(b, v);
    if (!inserted) {
      it->second += v;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, v] : o.terms_) add_term(b, v);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, v] : o.terms_) add_term(b, S(-v));
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, v] : terms_) v *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& [b, v] : a.terms_) v = -v;
    return a;
  }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, const S& s) {
    if (Traits::is_zero(s)) throw ZeroNorm("division of a multivector by zero");
    for (auto& [b, v] : a.terms_) v /= s;
    return a;
  }

  /// Clifford product, written order.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector out(a.m_);
    for (const auto& [ba, va] : a.terms_) {
      for (const auto& [bb, vb] : b.terms_) {
        S prod = va * vb;
        if (blade_product_sign(ba, bb) < 0) prod = -prod;
        out.add_term(ba ^ bb, prod);
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  template <ScalarKind T>
  Multivector<T> cast() const {
    Multivector<T> out(m_);
    for (const auto& [b, v] : terms_) {
      if constexpr (std::same_as<S, T>)
        out.add_term(b, v);
      else
        out.add_term(b, ScalarTraits<T>::from_rational(Rational(v)));
    }
    return out;
  }

  /// Largest absolute blade coefficient.
  double max_abs() const {
    double r = 0.0;
    for (const auto& [b, v] : terms_) r = std::max(r, std::abs(Traits::to_double(v)));
    return r;
  }

  void check_same(const Multivector& o) const {
    if (m_ != o.m_)
      throw SignatureMismatch("multivectors over R_" + std::to_string(m_) + " and R_" + std::to_string(o.m_));
  }

 private:
  int m_ = 0;
  TermMap terms_;
};

using MultivectorQ = Multivector<Rational>;
using MultivectorF = Multivector<double>;

/// Grade-k part scaled by (-1)^{k(k+1)/2}.
template <ScalarKind S>
Multivector<S> conjugate(const Multivector<S>& a) {
  Multivector<S> out(a.dim());
  for (const auto& [b, v] : a.terms()) out.add_term(b, conjugation_sign(b) < 0 ? S(-v) : v);
  return out;
}

template <ScalarKind S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.dim()) throw std::invalid_argument("grade outside 0..m");
  Multivector<S> out(a.dim());
  for (const auto& [b, v] : a.terms())
    if (grade(b) == k) out.add_term(b, v);
  return out;
}

template <ScalarKind S>
bool is_paravector(const Multivector<S>& a) {
  for (const auto& [b, v] : a.terms())
    if (grade(b) > 1) return false;
  return true;
}

/// x = alpha + J beta with beta >= 0. `beta` is present when it is
/// representable in S (always for doubles; for rationals only when
/// beta_squared is a perfect square). `unit` is empty on the real axis.
template <ScalarKind S>
struct ParavectorParts {
  S alpha;
  S beta_squared;
  std::optional<S> beta;
  std::optional<Multivector<S>> unit;
};

template <ScalarKind S>
ParavectorParts<S> paravector_parts(const Multivector<S>& x) {
  if (!is_paravector(x)) throw NotParavector("paravector_parts: input has components of grade >= 2");
  ParavectorParts<S> p{x.scalar_part(), S(0), std::nullopt, std::nullopt};
  Multivector<S> vec = grade_project(x, 1);
  for (const auto& [b, v] : vec.terms()) p.beta_squared += v * v;
  if (ScalarTraits<S>::is_zero(p.beta_squared)) {
    p.beta = S(0);
    return p;
  }
  if constexpr (std::same_as<S, double>) {
    p.beta = std::sqrt(p.beta_squared);
  } else {
    p.beta = exact_sqrt(p.beta_squared);
  }
  if (p.beta) p.unit = vec / *p.beta;
  return p;
}

/// Inverse of a paravector: conjugate(v) / (v conjugate(v)).
template <ScalarKind S>
Multivector<S> vector_inverse(const Multivector<S>& v) {
  if (!is_paravector(v)) throw NotParavector("vector_inverse: input is not a paravector");
  Multivector<S> vbar = conjugate(v);
  Multivector<S> norm = v * vbar;
  if (!norm.is_real()) throw ConsistencyError("v * conj(v) is not real");
  S n = norm.scalar_part();
  if (ScalarTraits<S>::is_zero(n)) throw ZeroNorm("vector_inverse of zero");
  return vbar / n;
}

template <ScalarKind S>
bool is_imaginary_unit(const Multivector<S>& x) {
  if (x.is_zero()) return false;
  for (const auto& [b, v] : x.terms())
    if (grade(b) != 1) return false;
  return x * x == Multivector<S>::scalar(x.dim(), S(-1));
}

/// Human-readable form, e.g. "3/2 - e1 + 2*e13".
std::string to_string(const MultivectorQ& x);
std::string to_string(const MultivectorF& x);

}  // namespace slicewb
