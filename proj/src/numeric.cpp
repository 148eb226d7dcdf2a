#include "slicewb/numeric.hpp"

#include <algorithm>
#include <limits>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slicewb/harmonic.hpp"

namespace slicewb {

namespace {

bool has_beta_pole(const SliceFunction& f, int h) {
  for (const auto& [k, p] : f.stem().components()) {
    auto lo = p.min_exponent(beta_var(h));
    if (lo && *lo < 0) return true;
  }
  return false;
}

MultivectorF direction(int m, int i) {
  return i == 0 ? MultivectorF::scalar(m, 1.0) : MultivectorF::generator(m, i);
}

void check_stencil(const SliceFunction& f, int h, const PointF& x, double step) {
  if (!has_beta_pole(f, h)) return;
  auto parts = paravector_parts(x.at(h - 1));
  if (*parts.beta <= step) throw PoleError("finite-difference stencil crosses beta_" + std::to_string(h) + " = 0");
}

// second central difference sum at one spacing
FdEstimate laplacian_at(const SliceFunction& f, int h, const PointF& x, double step) {
  const int m = f.dim();
  FdEstimate out{MultivectorF(m), 0.0};
  MultivectorF centre = evaluate<double>(f, x);
  out.scale = centre.max_abs();
  for (int i = 0; i <= m; ++i) {
    PointF plus = x, minus = x;
    plus[h - 1] += direction(m, i) * step;
    minus[h - 1] -= direction(m, i) * step;
    MultivectorF fp = evaluate<double>(f, plus), fm = evaluate<double>(f, minus);
    out.scale = std::max({out.scale, fp.max_abs(), fm.max_abs()});
    out.value += (fp + fm - centre * 2.0) / (step * step);
  }
  return out;
}

FdEstimate dirac_at(const SliceFunction& f, int h, const PointF& x, double step) {
  const int m = f.dim();
  FdEstimate out{MultivectorF(m), 0.0};
  for (int i = 0; i <= m; ++i) {
    PointF plus = x, minus = x;
    plus[h - 1] += direction(m, i) * step;
    minus[h - 1] -= direction(m, i) * step;
    MultivectorF fp = evaluate<double>(f, plus), fm = evaluate<double>(f, minus);
    out.scale = std::max({out.scale, fp.max_abs(), fm.max_abs()});
    MultivectorF d = (fp - fm) / (2.0 * step);
    out.value += direction(m, i) * d;
  }
  out.value *= 0.5;
  return out;
}

template <class Op>
FdEstimate with_richardson(Op op, const StencilConfig& cfg) {
  FdEstimate coarse = op(cfg.step);
  if (!cfg.richardson) return coarse;
  FdEstimate fine = op(cfg.step / 2);
  fine.value = (fine.value * 4.0 - coarse.value) / 3.0;
  fine.scale = std::max(fine.scale, coarse.scale);
  return fine;
}

Residual make_residual(int idx, const char* op, const FdEstimate& est, const MultivectorF& exact, double tol) {
  Residual r;
  r.point = idx;
  r.op = op;
  r.abs = (est.value - exact).max_abs();
  r.rel = est.scale > 0 ? r.abs / est.scale : r.abs;
  r.pass = r.rel < tol;
  return r;
}

template <class Fd>
ResidualReport residual_kernel(const SliceFunction& f, int h, const SliceFunction& expected,
                               const std::vector<PointQ>& points, const StencilConfig& cfg, Exec exec, const char* op,
                               Fd fd) {
  validate(cfg);
  const int count = static_cast<int>(points.size());
  ResidualReport rep;
  rep.entries.resize(count);
  auto one = [&](int i) {
    // exceptions must not escape an OpenMP region
    try {
      PointF x = cast_point<double>(points[i]);
      FdEstimate est = fd(f, h, x, cfg);
      rep.entries[i] = make_residual(i, op, est, evaluate<double>(expected, x), cfg.tolerance);
    } catch (const std::exception& e) {
      rep.entries[i] = Residual{i, std::string(op) + " failed: " + e.what(),
                                std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), false};
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) one(i);
  } else {
    for (int i = 0; i < count; ++i) one(i);
  }
  return rep;
}

}  // namespace

void validate(const StencilConfig& cfg) {
  if (!(cfg.step > 0)) throw std::invalid_argument("stencil step must be positive");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("stencil tolerance must be positive");
  if (cfg.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
}

FdEstimate fd_laplacian(const SliceFunction& f, int h, const PointF& x, const StencilConfig& cfg) {
  validate(cfg);
  f.stem().check_variable(h);
  check_stencil(f, h, x, cfg.step);
  return with_richardson([&](double s) { return laplacian_at(f, h, x, s); }, cfg);
}

FdEstimate fd_dirac(const SliceFunction& f, int h, const PointF& x, const StencilConfig& cfg) {
  validate(cfg);
  f.stem().check_variable(h);
  check_stencil(f, h, x, cfg.step);
  return with_richardson([&](double s) { return dirac_at(f, h, x, s); }, cfg);
}

std::vector<PointQ> sample_points(int n, int m, const StencilConfig& cfg) {
  check_algebra_dim(m);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> alpha_d(-2000, 2000), beta_d(500, 1500), t_d(-1000, 1000);
  std::vector<PointQ> out;
  for (int s = 0; s < cfg.samples; ++s) {
    PointQ x;
    for (int h = 0; h < n; ++h) {
      Rational alpha(alpha_d(rng), 1000), beta(beta_d(rng), 1000);
      alpha.canonicalize();
      beta.canonicalize();
      // inverse stereographic projection R^{m-1} -> S^{m-1}
      std::vector<Rational> t(m - 1);
      Rational norm2 = 0;
      for (auto& v : t) {
        v = Rational(t_d(rng), 500);
        v.canonicalize();
        norm2 += v * v;
      }
      Rational denom = norm2 + 1;
      MultivectorQ c = MultivectorQ::scalar(m, alpha);
      c.add_term(generator(1), beta * (norm2 - 1) / denom);
      for (int i = 0; i < m - 1; ++i) c.add_term(generator(i + 2), beta * 2 * t[i] / denom);
      x.push_back(std::move(c));
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool ResidualReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Residual& r) { return r.pass; });
}

double ResidualReport::max_rel() const {
  double r = 0;
  for (const auto& e : entries) r = std::max(r, e.rel);
  return r;
}

ResidualReport laplacian_residuals(const SliceFunction& f, int h, const SliceFunction& expected,
                                   const std::vector<PointQ>& points, const StencilConfig& cfg, Exec exec) {
  return residual_kernel(f, h, expected, points, cfg, exec, "laplacian", fd_laplacian);
}

ResidualReport dirac_residuals(const SliceFunction& f, int h, const SliceFunction& expected,
                               const std::vector<PointQ>& points, const StencilConfig& cfg, Exec exec) {
  return residual_kernel(f, h, expected, points, cfg, exec, "dirac", fd_dirac);
}

double convergence_ratio(const SliceFunction& f, int h, const PointF& x, double step) {
  MultivectorF exact = evaluate<double>(laplacian(f, h), x);
  FdEstimate half = laplacian_at(f, h, x, step / 2);
  double e1 = (laplacian_at(f, h, x, step).value - exact).max_abs();
  double e2 = (half.value - exact).max_abs();
  // below the rounding floor there is no truncation error to measure
  // (degree < 4): the ratio is undefined
  double floor = 1e3 * std::numeric_limits<double>::epsilon() * half.scale / (step * step / 4);
  if (e2 <= floor) return std::numeric_limits<double>::quiet_NaN();
  return e1 / e2;
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace slicewb
