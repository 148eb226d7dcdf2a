// Serial vs OpenMP timings for the finite-difference residual kernels and
// the battery runner. Results of both paths are compared before timing is
// reported, so a speedup never hides a disagreement.
#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <tuple>

#include "slicewb/battery.hpp"
#include "slicewb/fueter_sce.hpp"
#include "slicewb/harmonic.hpp"
#include "slicewb/numeric.hpp"
#include "slicewb/parser.hpp"

using namespace slicewb;

namespace {

template <class F>
double best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool same(const ResidualReport& a, const ResidualReport& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].abs != b.entries[i].abs || a.entries[i].pass != b.entries[i].pass) return false;
  return true;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(44) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (agree ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel timings"};
  int samples = 200, reps = 3, count = 200;
  app.add_option("--samples", samples, "points per residual kernel");
  app.add_option("--reps", reps, "repetitions, best time kept");
  app.add_option("--count", count, "battery size");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads: " << worker_threads() << "\n";
  std::cout << std::left << std::setw(44) << "kernel" << std::right << std::setw(10) << "serial s" << std::setw(10)
            << "omp s" << std::setw(10) << "speedup" << "\n";

  StencilConfig cfg;
  cfg.samples = samples;
  bool all_agree = true;

  for (auto [m, n, text] : {std::tuple{5, 2, "x1^8 e13 + x1^3 x2^5"}, std::tuple{7, 3, "x1^6 x2^4 x3^2 (1/2 + e246)"}}) {
    SliceFunction f = parse_slice_function(text, m, n);
    auto pts = sample_points(n, m, cfg);
    SliceFunction lap = laplacian(f, 1);
    ResidualReport s, p;
    double ts = best_of(reps, [&] { s = laplacian_residuals(f, 1, lap, pts, cfg, Exec::serial); });
    double tp = best_of(reps, [&] { p = laplacian_residuals(f, 1, lap, pts, cfg, Exec::parallel); });
    all_agree &= same(s, p);
    row("laplacian residuals m=" + std::to_string(m) + " n=" + std::to_string(n), ts, tp, same(s, p));

    SliceFunction dbar = dirac_symbolic(f, 1);
    ts = best_of(reps, [&] { s = dirac_residuals(f, 1, dbar, pts, cfg, Exec::serial); });
    tp = best_of(reps, [&] { p = dirac_residuals(f, 1, dbar, pts, cfg, Exec::parallel); });
    all_agree &= same(s, p);
    row("dirac residuals m=" + std::to_string(m) + " n=" + std::to_string(n), ts, tp, same(s, p));
  }

  BatteryConfig bc;
  bc.count = count;
  auto fns = generate_battery(bc);
  StencilConfig small = cfg;
  small.samples = 10;
  BatteryCheck check = [&](const BatteryFunction& b) {
    auto pts = sample_points(b.f.nvars(), b.f.dim(), small);
    for (int h = 1; h <= b.f.nvars(); ++h)
      for (const auto& in : regular_inputs_for(b.f, h)) {
        FueterSceCertificate c = fueter_sce(in, h, pts, small, Exec::serial);
        if (!c.symbolic_ok() || !c.numeric_ok()) return BatteryOutcome{false, "certificate"};
      }
    return BatteryOutcome{true, ""};
  };
  std::vector<BatteryOutcome> s, p;
  double ts = best_of(reps, [&] { s = run_battery(fns, check, Exec::serial); });
  double tp = best_of(reps, [&] { p = run_battery(fns, check, Exec::parallel); });
  bool agree = s.size() == p.size();
  for (std::size_t i = 0; agree && i < s.size(); ++i) agree = s[i].pass == p[i].pass;
  all_agree &= agree;
  row("Fueter-Sce battery, " + std::to_string(count) + " functions", ts, tp, agree);

  return all_agree ? 0 : 1;
}
