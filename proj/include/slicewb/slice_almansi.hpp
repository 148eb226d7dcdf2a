#pragma once
#include <map>
#include <string>
#include <vector>

#include "slicewb/almansi.hpp"

namespace slicewb {

/// One polyharmonicity certificate: Delta^k_h of a component.
struct PolyharmonicEntry {
  int h = 0;
  int k = 0;
  SubsetMask component = 0;
  bool zero = false;
};

struct SliceAlmansiResult {
  SubsetMask H = 0;
  std::map<SubsetMask, SliceFunction> components;  // K -> S^H_K(f)
  bool reconstruction_exact = false;
  bool components_circular = false;
  std::vector<PolyharmonicEntry> polyharmonic;  // filled for slice regular f
  std::optional<bool> regular_wrt_p;  // S^H_K in SR_p, p = min H^c
};

/// (x_K . f)'_{s,H}
SliceFunction slice_almansi_component(const SliceFunction& f, SubsetMask H, SubsetMask K);
/// (x_{h_s}^{chi_K} ... (x_{h_1}^{chi_K} f)'_{s,h_1} ...)'_{s,h_s}, H = {h_1 < ... < h_s}.
SliceFunction slice_almansi_component_nested(const SliceFunction& f, SubsetMask H, SubsetMask K);

/// sum_K (-1)^{|H-K|} xbar_{H-K} . S_K
SliceFunction slice_almansi_reconstruct(const std::map<SubsetMask, SliceFunction>& components, SubsetMask H, int m,
                                        int n);

/// Throws ConsistencyError when the reconstruction is not exact.
SliceAlmansiResult slice_almansi_decompose(const SliceFunction& f, SubsetMask H);

/// Candidates reconstruct f and coincide with S^H_K(f).
bool slice_almansi_uniqueness_check(const SliceFunction& f, SubsetMask H,
                                    const std::map<SubsetMask, SliceFunction>& candidates);

/// For f slice wrt x_h: S^{[[h]]}_K(f) == 0 for K in P(h-1) - {[[h-1]]} and the
/// reduced reconstruction holds. Functions outside S_h satisfy the check
/// vacuously.
bool ordered_vanishing_check(const SliceFunction& f, int h);

/// Index T over the elements of G, ascending.
using AlmansiIndex = std::vector<int>;

struct SimultaneousResult {
  SubsetMask H = 0;
  SubsetMask G = 0;
  int gamma = 0;
  std::map<std::pair<SubsetMask, AlmansiIndex>, SliceFunction> components;  // (K, T) -> E_{K,T}
  bool reconstruction_exact = false;
  bool components_harmonic = false;
};

/// |x_G|^{2T}
SliceFunction norm_weight(int m, int n, SubsetMask G, const AlmansiIndex& t);

/// Classical Almansi with p = gamma_m in every g in G applied to every
/// S^H_K(f). Throws PreconditionError unless G is inside H and f is slice
/// regular.
SimultaneousResult simultaneous_decompose(const SliceFunction& f, SubsetMask H, SubsetMask G);

/// G_T = sum_K (-1)^{|H-K|} xbar_{H-K} . E_{K,T}
SliceFunction regroup_G(const SimultaneousResult& r, const AlmansiIndex& t, int m, int n);

struct RegroupReport {
  std::map<AlmansiIndex, SliceFunction> groups;
  bool reconstruction_exact = false;
  std::map<int, bool> biharmonic;  // g -> Delta^2_g G_T == 0 for every T
};
RegroupReport regroup_all(const SliceFunction& f, const SimultaneousResult& r, SubsetMask check_vars);

/// Every T in {0..gamma-1}^{|G|}.
std::vector<AlmansiIndex> all_indices(int count, int gamma);

}  // namespace slicewb
