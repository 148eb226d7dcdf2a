#include "slicewb/battery.hpp"

#include <random>

namespace slicewb {

std::vector<BatteryFunction> generate_battery(const BatteryConfig& cfg) {
  if (cfg.dims.empty() || cfg.max_vars < 1 || cfg.max_vars > kMaxVariables || cfg.max_degree < 0 || cfg.max_terms < 1)
    throw std::invalid_argument("battery configuration out of range");
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<BatteryFunction> out;
  for (int i = 0; i < cfg.count; ++i) {
    const int m = cfg.dims[pick(0, static_cast<int>(cfg.dims.size()) - 1)];
    const int n = pick(1, cfg.max_vars);
    const int terms = pick(1, cfg.max_terms);
    StemPolynomial acc(m, n);
    std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ":";
    for (int t = 0; t < terms; ++t) {
      // exponents with total degree <= max_degree
      std::vector<int> exps(n, 0);
      int budget = pick(1, std::max(1, cfg.max_degree));
      for (int h = 0; h < n && budget > 0; ++h) {
        int e = h + 1 == n ? budget : pick(0, budget);
        exps[h] = e;
        budget -= e;
      }
      MultivectorQ c(m);
      int blades = pick(1, 2);
      for (int b = 0; b < blades; ++b) {
        Blade blade = static_cast<Blade>(pick(0, (1 << m) - 1));
        Rational v(pick(-5, 5), pick(1, 3));
        v.canonicalize();
        c.add_term(blade, v);
      }
      if (c.is_zero()) c = MultivectorQ::scalar(m, Rational(1));
      acc += monomial_stem(exps, c);
      label += t ? " +" : "";
      for (int h = 0; h < n; ++h)
        if (exps[h]) label += " x" + std::to_string(h + 1) + (exps[h] > 1 ? "^" + std::to_string(exps[h]) : "");
      label += " (" + to_string(c) + ")";
    }
    if (acc.is_zero()) acc = StemPolynomial::constant(n, MultivectorQ::scalar(m, Rational(1)));
    out.push_back({label, SliceFunction(std::move(acc))});
  }
  return out;
}

std::vector<SliceFunction> regular_inputs_for(const SliceFunction& f, int h) {
  f.stem().check_variable(h);
  if (h == 1) return {f};
  std::vector<SliceFunction> out;
  for (SubsetMask k = 0; k <= prefix_set(h - 1); ++k) {
    SliceFunction d = truncated_derivative(f, h - 1, k);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<BatteryOutcome> run_battery(const std::vector<BatteryFunction>& fns, const BatteryCheck& check, Exec exec) {
  const int count = static_cast<int>(fns.size());
  std::vector<BatteryOutcome> out(count);
  auto one = [&](int i) {
    try {
      out[i] = check(fns[i]);
    } catch (const std::exception& e) {
      out[i] = {false, std::string("exception: ") + e.what()};
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) one(i);
  } else {
    for (int i = 0; i < count; ++i) one(i);
  }
  return out;
}

}  // namespace slicewb
