#pragma once
#include <optional>
#include <string>
#include <vector>

#include "slicewb/harmonic.hpp"
#include "slicewb/numeric.hpp"

namespace slicewb {

/// Monogenicity certificate for g = Delta^{gamma_m}_h f.
///
/// dbar_h f = ((1-m)/2) f'_{s,h} for f slice regular in x_h, and dbar_h commutes
/// with Delta_h, so dbar_h g = ((1-m)/2) Delta^{gamma_m}_h f'_{s,h}: the exact
/// certificate is the vanishing of that last term. g itself is neither slice
/// regular nor has g'_{s,h} = 0 in general; both are reported for reference.
struct FueterSceCertificate {
  int h = 0;
  SliceFunction image;
  bool derivative_polyharmonic = false;          // Delta^gamma_h f'_{s,h} == 0
  std::optional<bool> dirac_exact;               // symbolic dbar_h g == 0 (f circular wrt {1..h-1})
  bool image_spherical_derivative_zero = false;  // g'_{s,h} == 0, informational
  ResidualReport numeric;                        // fd_dirac(g) against 0

  bool symbolic_ok() const { return derivative_polyharmonic && dirac_exact.value_or(true); }
  bool numeric_ok() const { return numeric.all_pass(); }
};

/// Throws PreconditionError unless f is slice regular wrt x_h.
FueterSceCertificate fueter_sce(const SliceFunction& f, int h, const std::vector<PointQ>& points,
                                const StencilConfig& cfg, Exec exec = Exec::parallel);

struct CrfReport {
  bool negative_matches = true;  // S_K == ((1-m)/2)^{-n} nested dbar, every K
  bool positive_matches = true;  // S_K == ((1-m)/2)^{+n} nested dbar, every K
  bool informative = false;      // some component is nonzero
  double numeric_max_rel = 0.0;  // last Dirac step by finite differences, negative convention
  std::string convention() const;
};

/// Compares S^{[[n]]}_K(f) with the nested Dirac construction
/// dbar_{x_n}(x_n^{chi_K(n)} ... dbar_{x_1}(x_1^{chi_K(1)} f)) under both exponent
/// conventions. Throws PreconditionError unless f is slice regular.
CrfReport crf_component_formula_check(const SliceFunction& f, const std::vector<PointQ>& points,
                                      const StencilConfig& cfg);

}  // namespace slicewb
