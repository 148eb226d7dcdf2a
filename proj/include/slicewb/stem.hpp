#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slicewb/laurent_poly.hpp"

namespace slicewb {

/// Subset K of {1..n}: bit (h-1) set iff h in K.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxVariables = kMaxPolyVars / 2;

constexpr SubsetMask singleton(int h) { return SubsetMask{1} << (h - 1); }
constexpr bool contains(SubsetMask k, int h) { return (k >> (h - 1)) & 1u; }
constexpr SubsetMask full_set(int n) { return (SubsetMask{1} << n) - 1; }
/// {1..h}
constexpr SubsetMask prefix_set(int h) { return full_set(h); }

/// Polynomial slot of alpha_h / beta_h (h is 1-based).
constexpr int alpha_var(int h) { return 2 * (h - 1); }
constexpr int beta_var(int h) { return 2 * (h - 1) + 1; }

std::string subset_to_string(SubsetMask k);
std::vector<int> subset_elements(SubsetMask k);
SubsetMask subset_from(const std::vector<int>& elems, int n);

/// Polynomial stem F = sum_K e_K F_K with F_K in R_m[alpha_h, beta_h^{+-1}].
/// Only nonzero components are stored.
class StemPolynomial {
 public:
  using ComponentMap = std::map<SubsetMask, LaurentPoly>;

  StemPolynomial() = default;
  StemPolynomial(int m, int n);

  static StemPolynomial constant(int n, const MultivectorQ& c);
  static StemPolynomial from_component(int n, SubsetMask k, const LaurentPoly& p);

  int dim() const { return m_; }
  int nvars() const { return n_; }
  const ComponentMap& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Pointer to F_K, or nullptr when F_K == 0.
  const LaurentPoly* find(SubsetMask k) const;
  /// Copy of F_K (zero polynomial when absent).
  LaurentPoly component(SubsetMask k) const;
  LaurentPoly zero_poly() const { return LaurentPoly(m_, 2 * n_); }

  void add(SubsetMask k, const LaurentPoly& p);
  void set(SubsetMask k, LaurentPoly p);

  /// Sets K present with F_K != 0.
  std::vector<SubsetMask> support() const;

  StemPolynomial& operator+=(const StemPolynomial& o);
  StemPolynomial& operator-=(const StemPolynomial& o);
  StemPolynomial& operator*=(const Rational& s);
  friend StemPolynomial operator+(StemPolynomial a, const StemPolynomial& b) { return a += b; }
  friend StemPolynomial operator-(StemPolynomial a, const StemPolynomial& b) { return a -= b; }
  friend StemPolynomial operator-(StemPolynomial a) { return a *= Rational(-1); }
  friend StemPolynomial operator*(StemPolynomial a, const Rational& s) { return a *= s; }
  friend StemPolynomial operator*(const Rational& s, StemPolynomial a) { return a *= s; }
  friend bool operator==(const StemPolynomial& a, const StemPolynomial& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.comps_ == b.comps_;
  }

  /// Applies `fn` to every stored component, keeping the slot.
  template <class Fn>
  StemPolynomial map_components(Fn&& fn) const {
    StemPolynomial out(m_, n_);
    for (const auto& [k, p] : comps_) out.add(k, fn(k, p));
    return out;
  }

  bool is_polynomial() const;
  bool is_real() const;

  void check_same(const StemPolynomial& o) const;
  void check_variable(int h) const;

 private:
  int m_ = 0;
  int n_ = 0;
  ComponentMap comps_;
};

/// Parity law F_K(conj_h z) = (-1)^{|K cap {h}|} F_K(z): in every component,
/// the beta_h exponent of each monomial has the parity of [h in K].
bool validate_stem(const StemPolynomial& f);

/// (F x G)_M = sum_{H xor K = M} (-1)^{|H cap K|} F_H G_K, coefficients in
/// written order.
StemPolynomial stem_tensor(const StemPolynomial& f, const StemPolynomial& g);

StemPolynomial partial_alpha(const StemPolynomial& f, int h);
StemPolynomial partial_beta(const StemPolynomial& f, int h);

/// Multiplies every monomial by beta_h^{-power}.
LaurentPoly divide_beta_exact(const LaurentPoly& p, int h, int power = 1);
StemPolynomial divide_beta_exact(const StemPolynomial& f, int h, int power = 1);

/// Complex structure J_h on components: (J_h G)_K = -G_{K+h} for h not in
/// K, and G_{K-h} for h in K.
StemPolynomial complex_structure(const StemPolynomial& f, int h);

/// 1/2 (d/d alpha_h - J_h d/d beta_h)
StemPolynomial wirtinger(const StemPolynomial& f, int h);
/// 1/2 (d/d alpha_h + J_h d/d beta_h)
StemPolynomial wirtinger_conj(const StemPolynomial& f, int h);

bool holomorphy_check(const StemPolynomial& f, int h);

/// Z_h = alpha_h + e_h beta_h, the stem of the coordinate x_h.
StemPolynomial coordinate_stem(int m, int n, int h);
/// alpha_h - e_h beta_h, the stem of the conjugate coordinate.
StemPolynomial conjugate_coordinate_stem(int m, int n, int h);

/// Z_1^{l_1} x ... x Z_n^{l_n} x c.
StemPolynomial monomial_stem(const std::vector<int>& exponents, const MultivectorQ& c);

/// Multi-line readable rendering ("F{1} = ...").
/// Variables default to a1, b1, a2, b2, ... (alpha_h, beta_h).
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names = {});
std::string to_string(const StemPolynomial& f);

}  // namespace slicewb
