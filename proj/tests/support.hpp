#pragma once
// Shared builders and hand-rolled random generators for the test suites.
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "slicewb/parser.hpp"
#include "slicewb/slice_almansi.hpp"

namespace slicewb::testing {

// exponents listed as a1, b1, a2, b2, ...
inline LaurentPoly poly(int m, int n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  LaurentPoly p(m, 2 * n);
  for (const auto& [ex, c] : terms) {
    Exponents e{};
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = static_cast<std::int16_t>(ex[i]);
    p.add_term(e, MultivectorQ::scalar(m, c));
  }
  return p;
}

inline StemPolynomial stem(int m, int n, std::initializer_list<std::pair<SubsetMask, LaurentPoly>> comps) {
  StemPolynomial s(m, n);
  for (const auto& [k, p] : comps) s.add(k, p);
  return s;
}

inline SliceFunction fn(int m, int n, std::initializer_list<std::pair<SubsetMask, LaurentPoly>> comps) {
  return SliceFunction(stem(m, n, comps));
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// (x_v^n)'_s by the binomial theorem: odd powers of J*beta, one beta removed
inline LaurentPoly power_derivative(int m, int n, int v, int deg) {
  LaurentPoly p(m, 2 * n);
  Rational binom(1);
  for (int k = 0; k <= deg; ++k) {
    if (k % 2 == 1) {
      Exponents e{};
      e[alpha_var(v)] = static_cast<std::int16_t>(deg - k);
      e[beta_var(v)] = static_cast<std::int16_t>(k - 1);
      p.add_term(e, MultivectorQ::scalar(m, (k / 2) % 2 == 0 ? binom : -binom));
    }
    binom = binom * (deg - k) / (k + 1);
  }
  return p;
}

// a real polynomial as a circular function
inline SliceFunction circ(const LaurentPoly& p) { return SliceFunction(stem(p.dim(), p.nvars() / 2, {{0, p}})); }

inline LaurentPoly in2(std::initializer_list<std::pair<std::pair<int, int>, Rational>> terms) {
  LaurentPoly p(5, 4);
  for (const auto& [ab, c] : terms) {
    Exponents e{};
    e[alpha_var(2)] = static_cast<std::int16_t>(ab.first);
    e[beta_var(2)] = static_cast<std::int16_t>(ab.second);
    p.add_term(e, MultivectorQ::scalar(5, c));
  }
  return p;
}

// the harmonic pieces of (x2^7)'_s and (x2^8)'_s in R^6
inline LaurentPoly deg6() { return in2({{{6, 0}, 12}, {{4, 2}, -36}, {{2, 4}, q(108, 7)}, {{0, 6}, q(-4, 7)}}); }
inline LaurentPoly deg4() { return in2({{{4, 0}, -5}, {{2, 2}, 6}, {{0, 4}, q(-3, 7)}}); }
inline LaurentPoly deg7() { return in2({{{7, 0}, 15}, {{5, 2}, -63}, {{3, 4}, 45}, {{1, 6}, -5}}); }
inline LaurentPoly deg5() { return in2({{{5, 0}, -7}, {{3, 2}, 14}, {{1, 4}, -3}}); }

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return range(0, 1) == 1; }
  Rational small_rational() { return q(range(-9, 9), range(1, 4)); }
  int odd_dim() { return std::vector<int>{3, 5, 7}[range(0, 2)]; }

  MultivectorQ multivector(int m, int max_terms = 4) {
    MultivectorQ x(m);
    for (int t = range(1, max_terms); t > 0; --t) x.add_term(static_cast<Blade>(range(0, (1 << m) - 1)), small_rational());
    return x;
  }

  MultivectorQ vector(int m) {
    MultivectorQ x(m);
    while (x.is_zero())
      for (int i = 1; i <= m; ++i)
        if (coin()) x.add_term(generator(i), small_rational());
    return x;
  }

  // one-sided slice regular: sum of x^l c with random multi-exponents
  SliceFunction regular(int m, int n, int max_degree = 5, int max_terms = 3) {
    StemPolynomial s(m, n);
    for (int t = range(1, max_terms); t > 0; --t) {
      std::vector<int> ex(n);
      for (auto& e : ex) e = range(0, max_degree);
      s += monomial_stem(ex, multivector(m, 2));
    }
    return SliceFunction(s);
  }

  // arbitrary slice function: random monomials respecting the parity law
  SliceFunction general(int m, int n, int max_degree = 4, int max_terms = 4) {
    StemPolynomial s(m, n);
    for (int t = range(1, max_terms); t > 0; --t) {
      SubsetMask k = static_cast<SubsetMask>(range(0, static_cast<int>(full_set(n))));
      Exponents e{};
      for (int h = 1; h <= n; ++h) {
        e[alpha_var(h)] = static_cast<std::int16_t>(range(0, max_degree));
        int b = 2 * range(0, max_degree / 2) + (contains(k, h) ? 1 : 0);
        e[beta_var(h)] = static_cast<std::int16_t>(b);
      }
      LaurentPoly p(m, 2 * n);
      p.add_term(e, multivector(m, 2));
      s.add(k, p);
    }
    return SliceFunction(s);
  }

  // circular wrt {1..h-1}, slice regular in every variable >= h
  SliceFunction circular_prefix(int m, int n, int h) {
    SliceFunction f = regular(m, n, 4, 2);
    return h > 1 ? spherical_value(f, prefix_set(h - 1)) : f;
  }
};

}  // namespace slicewb::testing
