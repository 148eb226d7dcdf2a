#include "slicewb/fueter_sce.hpp"

#include <algorithm>

#include "slicewb/slice_almansi.hpp"

namespace slicewb {

FueterSceCertificate fueter_sce(const SliceFunction& f, int h, const std::vector<PointQ>& points,
                                const StencilConfig& cfg, Exec exec) {
  f.stem().check_variable(h);
  if (!is_slice_regular_wrt(f, h)) throw PreconditionError("fueter_sce: f is not slice regular wrt x_" + std::to_string(h));
  const int gamma = sce_exponent(f.dim());
  FueterSceCertificate c;
  c.h = h;
  c.image = laplacian_power(f, h, gamma);
  c.derivative_polyharmonic = laplacian_power(spherical_derivative(f, h), h, gamma).is_zero();
  if (is_circular_wrt(c.image, prefix_set(h - 1))) c.dirac_exact = dirac_symbolic(c.image, h).is_zero();
  c.image_spherical_derivative_zero = spherical_derivative(c.image, h).is_zero();
  SliceFunction zero(StemPolynomial(f.dim(), f.nvars()));
  c.numeric = dirac_residuals(c.image, h, zero, points, cfg, exec);
  return c;
}

std::string CrfReport::convention() const {
  if (!informative) return "uninformative";
  if (negative_matches && positive_matches) return "both";
  if (negative_matches) return "negative";
  if (positive_matches) return "positive";
  return "neither";
}

CrfReport crf_component_formula_check(const SliceFunction& f, const std::vector<PointQ>& points,
                                      const StencilConfig& cfg) {
  if (!is_slice_regular(f)) throw PreconditionError("crf_component_formula_check: f must be slice regular");
  const int m = f.dim(), n = f.nvars();
  const SubsetMask all = full_set(n);
  const Rational c = ratio(1 - m, 2);
  Rational c_pow = 1;
  for (int i = 0; i < n; ++i) c_pow *= c;
  CrfReport rep;
  for (SubsetMask K = 0; K <= all; ++K) {
    SliceFunction target = slice_almansi_component(f, all, K);
    SliceFunction g = f, last = f;
    for (int h = 1; h <= n; ++h) {
      if (contains(K, h)) g = slice_product(coordinate(m, n, h), g);
      last = g;
      g = dirac_symbolic(g, h);
    }
    if (!target.is_zero() || !g.is_zero()) rep.informative = true;
    if (!(target == (1 / c_pow) * g)) rep.negative_matches = false;
    if (!(target == c_pow * g)) rep.positive_matches = false;
    // the outer Dirac step by finite differences, scaled by the negative convention
    SliceFunction inner_scaled = (1 / c_pow) * last;
    ResidualReport r = dirac_residuals(inner_scaled, n, target, points, cfg);
    rep.numeric_max_rel = std::max(rep.numeric_max_rel, r.max_rel());
  }
  return rep;
}

}  // namespace slicewb
