#pragma once
#include <optional>
#include <string>
#include <vector>

#include "slicewb/slice_function.hpp"

namespace slicewb {

/// (m-1)/2
int sce_exponent(int m);

/// a_j^(k) = (2k-j-1)! / ((j-1)! (k-j)! (-2)^{k-j}) for 1 <= j <= k <= k_max.
class CoefficientTable {
 public:
  explicit CoefficientTable(int k_max);

  int k_max() const { return k_max_; }
  /// Zero outside 1 <= j <= k.
  Rational at(int k, int j) const;

  /// a_{j+1}^(k+1) == sum_{l=j}^{k} (-1)^{l-j} (l!/j!) a_l^(k), for k < k_max.
  bool check_recursion() const;
  /// a_j^(k+1) == a_{j-1}^(k) + (j-2k) a_j^(k), for k < k_max.
  bool check_stepping() const;

  /// Lines "k,j,\"p/q\"".
  std::string to_csv() const;

 private:
  int k_max_;
  std::vector<std::vector<Rational>> rows_;  // rows_[k][j]
};

/// Direct evaluation of the closed formula.
Rational coefficient_a(int k, int j);

/// prod_{i=1}^{k} (m - 2i - 1)
Rational laplacian_prefactor(int m, int k);

/// Laplacian of R^{m+1} in the h-th variable, acting on stem components.
SliceFunction laplacian(const SliceFunction& f, int h);
SliceFunction laplacian_power(const SliceFunction& f, int h, int k);

/// Delta^k_h f'_{s,h} by the closed forms. Variant 1 works on f'_{s,h};
/// variant 2 on the components F_{K+h}. Throws PreconditionError unless f
/// is holomorphic in variable h.
SliceFunction iterated_laplacian_closed_form(const SliceFunction& f, int h, int k, int variant = 1);

/// Delta^{k+1}_h f = -2(m-1) d/dx_h [Delta^k_h f'_{s,h}] with the bracket
/// taken from the closed form of the given variant (k = 0: f'_{s,h}).
SliceFunction iterated_laplacian_sliceregular(const SliceFunction& f, int h, int k, int variant = 1);

/// I(wirtinger(F, h))
SliceFunction slice_derivative(const SliceFunction& f, int h);

/// Axial Dirac operators in variable h. The formulas need J_h leftmost in
/// every term, so f must be circular wrt {1..h-1} (automatic for h = 1).
SliceFunction dirac_symbolic(const SliceFunction& f, int h);
SliceFunction dirac_conj_symbolic(const SliceFunction& f, int h);
inline SliceFunction dirac_symbolic_var1(const SliceFunction& f) { return dirac_symbolic(f, 1); }

/// Least k <= k_max with Delta^k_h f == 0.
std::optional<int> polyharmonic_degree(const SliceFunction& f, int h, int k_max);

/// x -> P(x_0, |x'|) for a profile in (a, b) with R_m coefficients.
struct AxialProfile {
  int m = 0;
  LaurentPoly profile;  // nvars == 2: slot 0 = a, slot 1 = b

  static AxialProfile from_poly(int m, LaurentPoly p);
  /// Profile read off the {} slot of a one-variable stem.
  static AxialProfile from_stem_slot(const StemPolynomial& f, SubsetMask k = 0);
};

AxialProfile axial_laplacian(const AxialProfile& p);
AxialProfile axial_laplacian_power(const AxialProfile& p, int k);
/// d^2/da^2 + d^2/db^2 == 0
bool is_planar_harmonic(const AxialProfile& p);

struct PolyharmonicConstruction {
  AxialProfile f;                  // b^{-1} F
  bool polyharmonic = false;       // Delta^{gamma_m} f == 0
  bool closed_form_matches = false;  // Delta^k f equals the closed form for k < gamma_m
  std::optional<int> harmonic_degree;  // least k with Delta^k f == 0
};

/// Throws PreconditionError if F is not planar harmonic.
PolyharmonicConstruction construct_polyharmonic(const AxialProfile& F, int gamma_limit = -1);

/// G with b G(a, b^2) = P(a, b), slot `var` of the result holding c = b^2.
/// Throws PreconditionError when P has a monomial of even (or negative) b-degree.
LaurentPoly whitney_factor(const LaurentPoly& p, int var);

/// 2^k P(k) sum_K e_K (d_c^k G_K)(alpha, beta^2), G_K the Whitney factor of
/// F_{K+h}; equals Delta^k_h f'_{s,h} for f holomorphic in h.
SliceFunction whitney_laplacian(const SliceFunction& f, int h, int k);

}  // namespace slicewb
