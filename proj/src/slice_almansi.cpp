#include "slicewb/slice_almansi.hpp"

#include <bit>

namespace slicewb {

namespace {

void check_subsets(const SliceFunction& f, SubsetMask H, SubsetMask K) {
  if (H & ~full_set(f.nvars())) throw std::invalid_argument("H is not a subset of {1..n}");
  if (K & ~H) throw std::invalid_argument("K must be a subset of H");
}

int sign_of(SubsetMask s) { return (std::popcount(s) & 1) ? -1 : 1; }

}  // namespace

SliceFunction slice_almansi_component(const SliceFunction& f, SubsetMask H, SubsetMask K) {
  check_subsets(f, H, K);
  return spherical_derivative(slice_product(ordered_monomial(f.dim(), f.nvars(), K), f), H);
}

SliceFunction slice_almansi_component_nested(const SliceFunction& f, SubsetMask H, SubsetMask K) {
  check_subsets(f, H, K);
  SliceFunction g = f;
  for (int h : subset_elements(H)) {
    if (contains(K, h)) g = slice_product(coordinate(f.dim(), f.nvars(), h), g);
    g = spherical_derivative(g, h);
  }
  return g;
}

SliceFunction slice_almansi_reconstruct(const std::map<SubsetMask, SliceFunction>& components, SubsetMask H, int m,
                                        int n) {
  SliceFunction acc(StemPolynomial(m, n));
  for (const auto& [K, s] : components) {
    SubsetMask rest = H & ~K;
    SliceFunction term = slice_product(ordered_monomial(m, n, rest, true), s);
    acc = sign_of(rest) > 0 ? acc + term : acc - term;
  }
  return acc;
}

SliceAlmansiResult slice_almansi_decompose(const SliceFunction& f, SubsetMask H) {
  check_subsets(f, H, 0);
  const int m = f.dim(), n = f.nvars();
  SliceAlmansiResult r;
  r.H = H;
  for (SubsetMask K = 0;; K = (K - H) & H) {  // enumerate subsets of H
    r.components.emplace(K, slice_almansi_component(f, H, K));
    if (K == H) break;
  }
  r.reconstruction_exact = slice_almansi_reconstruct(r.components, H, m, n) == f;
  if (!r.reconstruction_exact) throw ConsistencyError("slice Almansi reconstruction residual is nonzero");
  r.components_circular = true;
  for (const auto& [K, s] : r.components)
    if (!is_circular_wrt(s, H)) r.components_circular = false;
  if (is_slice_regular(f)) {
    const int gamma = sce_exponent(m);
    for (int h : subset_elements(H))
      for (const auto& [K, s] : r.components)
        r.polyharmonic.push_back({h, gamma, K, laplacian_power(s, h, gamma).is_zero()});
  }
  if (H != full_set(n)) {
    int p = std::countr_zero(~H) + 1;
    bool ok = true;
    for (const auto& [K, s] : r.components)
      if (!is_slice_regular_wrt(s, p)) ok = false;
    r.regular_wrt_p = ok;
  }
  return r;
}

bool slice_almansi_uniqueness_check(const SliceFunction& f, SubsetMask H,
                                    const std::map<SubsetMask, SliceFunction>& candidates) {
  if (!(slice_almansi_reconstruct(candidates, H, f.dim(), f.nvars()) == f)) return false;
  for (SubsetMask K = 0;; K = (K - H) & H) {
    auto it = candidates.find(K);
    SliceFunction expect = slice_almansi_component(f, H, K);
    if (it == candidates.end() ? !expect.is_zero() : !(it->second == expect)) return false;
    if (K == H) break;
  }
  return true;
}

bool ordered_vanishing_check(const SliceFunction& f, int h) {
  f.stem().check_variable(h);
  if (!is_slice_wrt(f, singleton(h))) return true;
  const int m = f.dim(), n = f.nvars();
  const SubsetMask below = prefix_set(h - 1), H = prefix_set(h), bit = singleton(h);
  for (SubsetMask K = 0; K < below; ++K)
    if (!slice_almansi_component(f, H, K).is_zero()) return false;
  // f = sum_{K in P(h-1)} (-1)^{|K^c|} xbar_{K^c} S_{K+h} - xbar_h S_{[[h-1]]}
  SliceFunction acc(StemPolynomial(m, n));
  for (SubsetMask K = 0; K <= below; ++K) {
    SubsetMask rest = below & ~K;
    SliceFunction term = slice_product(ordered_monomial(m, n, rest, true), slice_almansi_component(f, H, K | bit));
    acc = sign_of(rest) > 0 ? acc + term : acc - term;
  }
  acc = acc - slice_product(conjugate_coordinate_function(m, n, h), slice_almansi_component(f, H, below));
  return acc == f;
}

std::vector<AlmansiIndex> all_indices(int count, int gamma) {
  std::vector<AlmansiIndex> out{{}};
  for (int i = 0; i < count; ++i) {
    std::vector<AlmansiIndex> next;
    for (const auto& t : out)
      for (int v = 0; v < gamma; ++v) {
        AlmansiIndex u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

SliceFunction norm_weight(int m, int n, SubsetMask G, const AlmansiIndex& t) {
  auto vars = subset_elements(G);
  if (vars.size() != t.size()) throw std::invalid_argument("index length differs from |G|");
  SliceFunction acc = constant_function(m, n, MultivectorQ::scalar(m, Rational(1)));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (int j = 0; j < t[i]; ++j) acc = slice_product(acc, squared_norm(m, n, vars[i]));
  return acc;
}

SimultaneousResult simultaneous_decompose(const SliceFunction& f, SubsetMask H, SubsetMask G) {
  check_subsets(f, H, 0);
  if (G & ~H) throw PreconditionError("simultaneous_decompose: G must be a subset of H");
  if (!is_slice_regular(f)) throw PreconditionError("simultaneous_decompose: f must be slice regular");
  const int m = f.dim(), n = f.nvars();
  SimultaneousResult r;
  r.H = H;
  r.G = G;
  r.gamma = sce_exponent(m);
  SliceAlmansiResult base = slice_almansi_decompose(f, H);
  for (const auto& [K, s] : base.components) {
    std::vector<std::pair<AlmansiIndex, SliceFunction>> stage{{AlmansiIndex{}, s}};
    for (int g : subset_elements(G)) {
      std::vector<std::pair<AlmansiIndex, SliceFunction>> next;
      for (const auto& [t, piece] : stage) {
        ClassicalAlmansiResult ca = classical_almansi(piece, g, r.gamma);
        for (int j = 0; j < r.gamma; ++j) {
          AlmansiIndex u = t;
          u.push_back(j);
          next.emplace_back(std::move(u), ca.components[j]);
        }
      }
      stage = std::move(next);
    }
    for (auto& [t, piece] : stage) r.components.emplace(std::pair(K, t), std::move(piece));
  }
  SliceFunction acc(StemPolynomial(m, n));
  r.components_harmonic = true;
  for (const auto& [key, e] : r.components) {
    SubsetMask rest = H & ~key.first;
    SliceFunction term =
        slice_product(norm_weight(m, n, G, key.second), slice_product(ordered_monomial(m, n, rest, true), e));
    acc = sign_of(rest) > 0 ? acc + term : acc - term;
    for (int g : subset_elements(G))
      if (!laplacian(e, g).is_zero()) r.components_harmonic = false;
  }
  r.reconstruction_exact = acc == f;
  return r;
}

SliceFunction regroup_G(const SimultaneousResult& r, const AlmansiIndex& t, int m, int n) {
  SliceFunction acc(StemPolynomial(m, n));
  for (const auto& [key, e] : r.components) {
    if (key.second != t) continue;
    SubsetMask rest = r.H & ~key.first;
    SliceFunction term = slice_product(ordered_monomial(m, n, rest, true), e);
    acc = sign_of(rest) > 0 ? acc + term : acc - term;
  }
  return acc;
}

RegroupReport regroup_all(const SliceFunction& f, const SimultaneousResult& r, SubsetMask check_vars) {
  const int m = f.dim(), n = f.nvars();
  RegroupReport rep;
  SliceFunction acc(StemPolynomial(m, n));
  for (const auto& t : all_indices(std::popcount(r.G), r.gamma)) {
    SliceFunction g = regroup_G(r, t, m, n);
    acc = acc + slice_product(norm_weight(m, n, r.G, t), g);
    rep.groups.emplace(t, std::move(g));
  }
  rep.reconstruction_exact = acc == f;
  for (int v : subset_elements(check_vars)) {
    bool ok = true;
    for (const auto& [t, g] : rep.groups)
      if (!laplacian_power(g, v, 2).is_zero()) ok = false;
    rep.biharmonic[v] = ok;
  }
  return rep;
}

}  // namespace slicewb
