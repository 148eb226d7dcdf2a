#pragma once
#include <map>
#include <vector>

#include "slicewb/harmonic.hpp"

namespace slicewb {

struct ClassicalAlmansiResult {
  int var = 1;
  int degree = 1;
  std::vector<SliceFunction> components;  // h_0 .. h_{p-1}
  bool reconstruction_exact = false;
  bool components_harmonic = false;
};

/// int_0^1 xi^{j-2+(m+1)/2} g(xi x) d xi acting on x_g only: a monomial of
/// (alpha_g, beta_g)-degree d picks up 1/(d + j - 1 + (m+1)/2).
SliceFunction scale_integral(const SliceFunction& g, int var, int j);

/// f = sum_j |x_g|^{2j} h_j with Delta_g h_j = 0. Throws PreconditionError
/// unless Delta^p_g f == 0 and 1 <= p <= gamma_m + 1.
ClassicalAlmansiResult classical_almansi(const SliceFunction& f, int var, int p);

/// sum_j |x_g|^{2j} h_j
SliceFunction almansi_reconstruct(const std::vector<SliceFunction>& components, int var);

/// n!! with (-1)!! = 1; throws DoubleFactorialRange below -1.
mpz_class double_factorial(int n);

/// Closed-form components of a polynomial homogeneous in x_g of degree n:
/// h_k = (m+2n-4k-1)!! / ((2k)!! (m+2n-2k-1)!!)
///       * sum_j (-1)^j (m+2n-4k-2j-3)!! / ((2j)!! (m+2n-4k-3)!!) |x|^{2j} Delta^{j+k} p.
/// Throws PreconditionError when the input is not homogeneous in x_g.
std::vector<SliceFunction> gauss_canonical(const SliceFunction& p, int var);

/// (alpha_g, beta_g)-degree of every monomial, or nullopt when mixed.
std::optional<int> homogeneous_degree(const SliceFunction& f, int var);

}  // namespace slicewb
