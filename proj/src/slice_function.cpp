#include "slicewb/slice_function.hpp"

#include <bit>

namespace slicewb {

SliceFunction::SliceFunction(StemPolynomial stem) : stem_(std::move(stem)) {
  if (!validate_stem(stem_)) throw InvalidStem("stem violates the parity law F_K(conj_h z) = (-1)^{|K cap {h}|} F_K(z)");
}

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g) {
  return SliceFunction(stem_tensor(f.stem(), g.stem()));
}

SliceFunction spherical_value(const SliceFunction& f, int h) {
  f.stem().check_variable(h);
  StemPolynomial out(f.dim(), f.nvars());
  for (const auto& [k, p] : f.stem().components())
    if (!contains(k, h)) out.add(k, p);
  return SliceFunction(std::move(out));
}

SliceFunction spherical_derivative(const SliceFunction& f, int h) {
  f.stem().check_variable(h);
  StemPolynomial out(f.dim(), f.nvars());
  for (const auto& [k, p] : f.stem().components())
    if (contains(k, h)) out.add(k & ~singleton(h), divide_beta_exact(p, h));
  return SliceFunction(std::move(out));
}

SliceFunction spherical_value(const SliceFunction& f, SubsetMask hs) {
  SliceFunction g = f;
  for (int h : subset_elements(hs)) g = spherical_value(g, h);
  return g;
}

SliceFunction spherical_derivative(const SliceFunction& f, SubsetMask hs) {
  SliceFunction g = f;
  for (int h : subset_elements(hs)) g = spherical_derivative(g, h);
  return g;
}

SliceFunction truncated_derivative(const SliceFunction& f, int h, SubsetMask hs) {
  f.stem().check_variable(h);
  if (hs & ~prefix_set(h)) throw std::invalid_argument("truncated_derivative: H must lie in {1..h}");
  return spherical_value(spherical_derivative(f, hs), prefix_set(h) & ~hs);
}

bool is_slice_wrt(const SliceFunction& f, SubsetMask hs) {
  for (const auto& [k, p] : f.stem().components()) {
    SubsetMask hit = k & hs;
    if (hit == 0) continue;
    if (std::popcount(hit) != 1) return false;
    // K = {h} + Q with Q above h
    SubsetMask below = hit - 1;
    if (k & below) return false;
  }
  return true;
}

bool is_circular_wrt(const SliceFunction& f, SubsetMask hs) {
  for (const auto& [k, p] : f.stem().components())
    if (k & hs) return false;
  return true;
}

bool is_slice_regular_wrt(const SliceFunction& f, int h) {
  return is_slice_wrt(f, singleton(h)) && holomorphy_check(f.stem(), h);
}

bool is_slice_regular(const SliceFunction& f) {
  for (int h = 1; h <= f.nvars(); ++h)
    if (!holomorphy_check(f.stem(), h)) return false;
  return true;
}

bool is_slice_preserving(const SliceFunction& f) { return f.stem().is_real(); }

SliceFunction imaginary_coordinate(int m, int n, int h) {
  StemPolynomial s(m, n);
  s.check_variable(h);
  s.add(singleton(h), LaurentPoly::variable(m, 2 * n, beta_var(h)));
  return SliceFunction(std::move(s));
}

SliceFunction coordinate(int m, int n, int h) { return SliceFunction(coordinate_stem(m, n, h)); }

SliceFunction conjugate_coordinate_function(int m, int n, int h) {
  return SliceFunction(conjugate_coordinate_stem(m, n, h));
}

SliceFunction constant_function(int m, int n, const MultivectorQ& c) {
  if (c.dim() != m) throw SignatureMismatch("constant over the wrong algebra");
  return SliceFunction(StemPolynomial::constant(n, c));
}

SliceFunction ordered_monomial(int m, int n, SubsetMask t, bool conjugated) {
  StemPolynomial acc = StemPolynomial::constant(n, MultivectorQ::scalar(m, Rational(1)));
  for (int h : subset_elements(t))
    acc = stem_tensor(acc, conjugated ? conjugate_coordinate_stem(m, n, h) : coordinate_stem(m, n, h));
  return SliceFunction(std::move(acc));
}

SliceFunction squared_norm(int m, int n, int h) {
  StemPolynomial s(m, n);
  s.check_variable(h);
  s.add(0, LaurentPoly::variable(m, 2 * n, alpha_var(h), 2) + LaurentPoly::variable(m, 2 * n, beta_var(h), 2));
  return SliceFunction(std::move(s));
}

bool one_var_regularity_check(const SliceFunction& f) {
  if (!is_slice_regular_wrt(f, 1)) return false;
  for (int h = 1; h < f.nvars(); ++h) {
    for (SubsetMask k = 0; k <= prefix_set(h); ++k)
      if (!is_slice_regular_wrt(truncated_derivative(f, h, k), h + 1)) return false;
  }
  return true;
}

}  // namespace slicewb
