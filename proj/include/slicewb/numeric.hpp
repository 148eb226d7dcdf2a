#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slicewb/slice_function.hpp"

namespace slicewb {

struct StencilConfig {
  double step = 1e-3;
  double tolerance = 1e-5;  // relative to the largest blade magnitude over the stencil
  int samples = 20;
  std::uint64_t seed = 20240501;
  // combine h and h/2 estimates; plain second differences miss 1e-5 near
  // small |x| once the degree reaches 4
  bool richardson = true;
};

void validate(const StencilConfig& cfg);

/// Finite-difference value plus the normalisation scale.
struct FdEstimate {
  MultivectorF value;
  double scale = 0.0;  // max blade magnitude of f over the stencil
};

/// sum over the m+1 real coordinates of x_h of second central differences.
FdEstimate fd_laplacian(const SliceFunction& f, int h, const PointF& x, const StencilConfig& cfg);
/// 1/2 (D_0 f + sum_i e_i D_i f), first central differences, e_i on the left.
FdEstimate fd_dirac(const SliceFunction& f, int h, const PointF& x, const StencilConfig& cfg);

/// alpha in [-2,2], beta in [1/2,3/2], J a rational unit vector (inverse
/// stereographic image of a rational point), so beta stays exact.
std::vector<PointQ> sample_points(int n, int m, const StencilConfig& cfg);

struct Residual {
  int point = 0;
  std::string op;
  double abs = 0.0;
  double rel = 0.0;
  bool pass = false;
};

struct ResidualReport {
  std::vector<Residual> entries;
  bool all_pass() const;
  double max_rel() const;
};

enum class Exec { serial, parallel };

/// |fd_laplacian(f) - expected| at every point; `expected` is evaluated
/// from a symbolic result.
ResidualReport laplacian_residuals(const SliceFunction& f, int h, const SliceFunction& expected,
                                   const std::vector<PointQ>& points, const StencilConfig& cfg,
                                   Exec exec = Exec::parallel);
ResidualReport dirac_residuals(const SliceFunction& f, int h, const SliceFunction& expected,
                               const std::vector<PointQ>& points, const StencilConfig& cfg,
                               Exec exec = Exec::parallel);

/// err(step) / err(step/2) of the Laplacian stencil against the exact value.
double convergence_ratio(const SliceFunction& f, int h, const PointF& x, double step);

/// Threads available to the parallel kernels (1 without OpenMP).
int worker_threads();

}  // namespace slicewb
