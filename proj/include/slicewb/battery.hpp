#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slicewb/numeric.hpp"

namespace slicewb {

/// Random one-sided slice regular polynomials sum_i x^{l_i} c_i.
struct BatteryConfig {
  int count = 50;
  std::uint64_t seed = 7;
  int max_vars = 3;
  int max_degree = 8;
  int max_terms = 3;
  std::vector<int> dims{3, 5, 7};
};

struct BatteryFunction {
  std::string label;  // e.g. "m=5 n=2: x1^3 x2^2 (1/2 + e13) + ..."
  SliceFunction f;
};

std::vector<BatteryFunction> generate_battery(const BatteryConfig& cfg);

/// Inputs slice regular wrt x_h built from f: f itself for h = 1, else the
/// nonzero truncated derivatives D^{h-1}_K(f), K in P(h-1).
std::vector<SliceFunction> regular_inputs_for(const SliceFunction& f, int h);

struct BatteryOutcome {
  bool pass = false;
  std::string detail;  // failure note or exception text
};

using BatteryCheck = std::function<BatteryOutcome(const BatteryFunction&)>;

/// Runs `check` on every function; exceptions become failures. The parallel
/// path distributes functions over OpenMP threads.
std::vector<BatteryOutcome> run_battery(const std::vector<BatteryFunction>& fns, const BatteryCheck& check,
                                        Exec exec = Exec::parallel);

}  // namespace slicewb
