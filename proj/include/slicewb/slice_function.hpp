#pragma once
#include <span>
#include <vector>

#include "slicewb/stem.hpp"

namespace slicewb {

/// Function on (R^{m+1})^n induced by a stem that passes the parity law.
/// Negative beta exponents are allowed; evaluation at the matching pole
/// is an error.
class SliceFunction {
 public:
  SliceFunction() = default;
  /// Throws InvalidStem when the parity law fails.
  explicit SliceFunction(StemPolynomial stem);

  const StemPolynomial& stem() const { return stem_; }
  int dim() const { return stem_.dim(); }
  int nvars() const { return stem_.nvars(); }
  bool is_zero() const { return stem_.is_zero(); }

  friend SliceFunction operator+(const SliceFunction& a, const SliceFunction& b) { return SliceFunction(a.stem_ + b.stem_); }
  friend SliceFunction operator-(const SliceFunction& a, const SliceFunction& b) { return SliceFunction(a.stem_ - b.stem_); }
  friend SliceFunction operator*(const Rational& s, const SliceFunction& a) { return SliceFunction(s * a.stem_); }
  friend bool operator==(const SliceFunction& a, const SliceFunction& b) { return a.stem_ == b.stem_; }

 private:
  StemPolynomial stem_;
};

template <ScalarKind S>
using Point = std::vector<Multivector<S>>;
using PointQ = Point<Rational>;
using PointF = Point<double>;

template <ScalarKind S>
Point<S> cast_point(const Point<Rational>& x) {
  Point<S> out;
  for (const auto& c : x) out.push_back(c.template cast<S>());
  return out;
}

/// alpha_h, beta_h and J_h (J_h empty on the real axis) for every coordinate.
template <ScalarKind S>
struct PointData {
  std::vector<S> values;  // alpha_1, beta_1, alpha_2, ...
  std::vector<std::optional<Multivector<S>>> units;
};

template <ScalarKind S>
PointData<S> point_data(const Point<S>& x, int m, int n) {
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point has the wrong number of coordinates");
  PointData<S> d;
  for (int h = 1; h <= n; ++h) {
    const auto& c = x[h - 1];
    if (c.dim() != m) throw SignatureMismatch("point coordinate over the wrong algebra");
    auto parts = paravector_parts(c);
    if (!parts.beta) throw IrrationalBeta("coordinate " + std::to_string(h) + " has irrational |Im x|");
    d.values.push_back(parts.alpha);
    d.values.push_back(*parts.beta);
    d.units.push_back(parts.unit);
  }
  return d;
}

/// sum_K J_{k1} ... J_{kp} F_K(alpha, beta).
template <ScalarKind S>
Multivector<S> evaluate(const SliceFunction& f, const Point<S>& x) {
  int m = f.dim(), n = f.nvars();
  PointData<S> d = point_data(x, m, n);
  Multivector<S> out(m);
  for (const auto& [k, p] : f.stem().components()) {
    Multivector<S> v = p.template evaluate<S>(std::span<const S>(d.values));
    if (v.is_zero()) continue;
    Multivector<S> units = Multivector<S>::scalar(m, ScalarTraits<S>::from_int(1));
    bool on_axis = false;
    for (int h : subset_elements(k)) {
      if (!d.units[h - 1]) {
        on_axis = true;  // F_K is odd in beta_h, so only a pole could survive; evaluate() already threw
        break;
      }
      units = units * *d.units[h - 1];
    }
    if (on_axis) continue;
    out += units * v;
  }
  return out;
}

/// Conjugates coordinate h: alpha_h - J_h beta_h.
template <ScalarKind S>
Point<S> conjugate_coordinate(Point<S> x, int h) {
  x.at(h - 1) = conjugate(x[h - 1]);
  return x;
}

/// I(F x G)
SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g);

SliceFunction spherical_value(const SliceFunction& f, int h);
SliceFunction spherical_derivative(const SliceFunction& f, int h);
/// Iterated over H in ascending order.
SliceFunction spherical_value(const SliceFunction& f, SubsetMask hs);
SliceFunction spherical_derivative(const SliceFunction& f, SubsetMask hs);

/// D^h_H(f) = (f'_{s,H})^o_{s,{1..h} - H}, H a subset of {1..h}.
SliceFunction truncated_derivative(const SliceFunction& f, int h, SubsetMask hs);

bool is_slice_wrt(const SliceFunction& f, SubsetMask hs);
bool is_circular_wrt(const SliceFunction& f, SubsetMask hs);
/// Slice wrt x_h and holomorphic in the h-th stem variable.
bool is_slice_regular_wrt(const SliceFunction& f, int h);
bool is_slice_regular(const SliceFunction& f);
bool is_slice_preserving(const SliceFunction& f);

/// Im(x_h) as a slice function: F_{h} = beta_h.
SliceFunction imaginary_coordinate(int m, int n, int h);
SliceFunction coordinate(int m, int n, int h);
SliceFunction conjugate_coordinate_function(int m, int n, int h);
SliceFunction constant_function(int m, int n, const MultivectorQ& c);
/// x_{t1} . ... . x_{ts} (or conjugates) for T ascending.
SliceFunction ordered_monomial(int m, int n, SubsetMask t, bool conjugated = false);
/// |x_h|^2 = alpha_h^2 + beta_h^2, real, in slot {}.
SliceFunction squared_norm(int m, int n, int h);

/// Representation formula in one variable:
/// (I-K)(J-K)^{-1} f(a+Jb) - (I-J)(J-K)^{-1} f(a+Kb).
template <ScalarKind S>
Multivector<S> representation_eval(const SliceFunction& f, const Multivector<S>& i_unit, const Multivector<S>& j_unit,
                                   const Multivector<S>& k_unit, const S& alpha, const S& beta) {
  if (f.nvars() != 1) throw std::invalid_argument("representation_eval: one-variable functions only");
  int m = f.dim();
  Multivector<S> a = Multivector<S>::scalar(m, alpha);
  Multivector<S> diff = j_unit - k_unit;
  if (diff.is_zero()) throw ZeroNorm("representation_eval: J - K is not invertible");
  Multivector<S> inv = vector_inverse(diff);
  Multivector<S> fj = evaluate<S>(f, Point<S>{a + j_unit * beta});
  Multivector<S> fk = evaluate<S>(f, Point<S>{a + k_unit * beta});
  return (i_unit - k_unit) * inv * fj - (i_unit - j_unit) * inv * fk;
}

/// f in SR_1 and D^h_{K}(f) in SR_{h+1} for h = 1..n-1, K in P(h).
bool one_var_regularity_check(const SliceFunction& f);

}  // namespace slicewb
