#include <doctest.h>

#include "support.hpp"
#include "slicewb/numeric.hpp"

using namespace slicewb;
using namespace slicewb::testing;

namespace {

constexpr SubsetMask E = 0, K1 = 1, K2 = 2, K12 = 3;

MultivectorQ e(int m, int i) { return MultivectorQ::generator(m, i); }
MultivectorQ sc(int m, const Rational& v) { return MultivectorQ::scalar(m, v); }

MultivectorQ power(const MultivectorQ& x, int k) {
  MultivectorQ r = sc(x.dim(), Rational(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

std::vector<PointQ> points(int n, int m, int count, std::uint64_t seed) {
  StencilConfig cfg;
  cfg.samples = count;
  cfg.seed = seed;
  return sample_points(n, m, cfg);
}

// 7a^6 - 35a^4b^2 + 21a^2b^4 - b^6 in variable h
LaurentPoly x7_derivative(int m, int n, int h) {
  auto at = [&](int a, int b) {
    std::vector<int> ex(2 * n, 0);
    ex[alpha_var(h)] = a;
    ex[beta_var(h)] = b;
    return ex;
  };
  LaurentPoly p(m, 2 * n);
  for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{6, 0, 7}, {4, 2, -35}, {2, 4, 21}, {0, 6, -1}}) {
    std::vector<int> ex = at(a, b);
    Exponents e{};
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = static_cast<std::int16_t>(ex[i]);
    p.add_term(e, sc(m, Rational(c)));
  }
  return p;
}

}  // namespace

TEST_CASE("evaluation against direct Clifford powers") {
  SliceFunction x4 = parse_slice_function("x1^4", 5, 1);
  MultivectorQ x = sc(5, Rational(1)) + Rational(3) * e(5, 1) + Rational(4) * e(5, 2);
  MultivectorQ expected = sc(5, Rational(476)) - Rational(96) * (Rational(3) * e(5, 1) + Rational(4) * e(5, 2));
  CHECK(evaluate<Rational>(x4, PointQ{x}) == expected);
  CHECK(power(x, 4) == expected);

  // real point: no units
  CHECK(evaluate<Rational>(x4, PointQ{sc(5, Rational(2))}) == sc(5, Rational(16)));
  MultivectorQ c = sc(3, q(1, 2)) + MultivectorQ::basis(3, 0b110);
  CHECK(evaluate<Rational>(constant_function(3, 1, c), PointQ{sc(3, Rational(1)) + e(3, 1)}) == c);
  CHECK_THROWS_AS(evaluate<Rational>(x4, PointQ{e(5, 1) + e(5, 2)}), IrrationalBeta);
}

TEST_CASE("property: one-variable monomials evaluate to Clifford powers") {
  Gen g(301);
  for (int i = 0; i < 40; ++i) {
    int m = g.odd_dim(), k = g.range(0, 7);
    MultivectorQ c = g.multivector(m, 3);
    SliceFunction f(monomial_stem({k}, c));
    for (const auto& x : points(1, m, 3, 1000 + i)) REQUIRE(evaluate<Rational>(f, x) == power(x[0], k) * c);
  }
}

TEST_CASE("property: two-variable monomials evaluate to ordered products") {
  // x1^a x2^b c = x1^a x2^b c pointwise only when the x2-part commutes past
  // nothing on the left, which holds since x1^a is leftmost
  Gen g(302);
  for (int i = 0; i < 30; ++i) {
    int m = g.odd_dim(), a = g.range(0, 4), b = g.range(0, 4);
    MultivectorQ c = g.multivector(m, 2);
    SliceFunction f(monomial_stem({a, b}, c));
    for (const auto& x : points(2, m, 3, 2000 + i)) REQUIRE(evaluate<Rational>(f, x) == power(x[0], a) * power(x[1], b) * c);
  }
}

TEST_CASE("slice products") {
  SliceFunction x = coordinate(3, 1, 1);
  CHECK(slice_product(x, x) == parse_slice_function("x1^2", 3, 1));
  CHECK(slice_product(constant_function(3, 1, e(3, 1)), constant_function(3, 1, e(3, 2))) ==
        constant_function(3, 1, MultivectorQ::basis(3, 0b011)));
  Gen g(303);
  for (int i = 0; i < 20; ++i) {
    SliceFunction f = g.general(5, 1);
    SliceFunction xf = slice_product(coordinate(5, 1, 1), f);
    for (const auto& p : points(1, 5, 4, 3000 + i)) REQUIRE(evaluate<Rational>(xf, p) == p[0] * evaluate<Rational>(f, p));
  }
}

TEST_CASE("spherical derivatives of monomials") {
  SliceFunction d = spherical_derivative(parse_slice_function("x1^4", 5, 1), 1);
  CHECK(d == fn(5, 1, {{E, poly(5, 1, {{{3, 0}, 4}, {{1, 2}, -4}})}}));
  SliceFunction d8 = spherical_derivative(parse_slice_function("x2^8", 5, 2), 2);
  CHECK(d8 == fn(5, 2, {{E, poly(5, 2, {{{0, 0, 7, 0}, 8}, {{0, 0, 5, 2}, -56}, {{0, 0, 3, 4}, 56}, {{0, 0, 1, 6}, -8}})}}));
  CHECK(spherical_derivative(d8, 2).is_zero());
}

TEST_CASE("truncated derivatives of x1^4 x2^7") {
  SliceFunction f = parse_slice_function("x1^4 x2^7", 5, 2);
  LaurentPoly d1 = poly(5, 2, {{{3, 0}, 4}, {{1, 2}, -4}});
  // D^1_{1}: (x1^4)'_s times the full x2^7 stem
  SliceFunction x27 = parse_slice_function("x2^7", 5, 2);
  StemPolynomial expected(5, 2);
  for (const auto& [k, p] : x27.stem().components()) expected.add(k, d1 * p);
  CHECK(truncated_derivative(f, 1, K1) == SliceFunction(expected));
  CHECK(truncated_derivative(f, 1, E) == spherical_value(f, 1));
  CHECK(truncated_derivative(f, 2, K12) == fn(5, 2, {{E, d1 * x7_derivative(5, 2, 2)}}));
}

TEST_CASE("sliceness predicates") {
  SliceFunction f = parse_slice_function("x1^4 x2^7", 5, 2);
  CHECK(is_slice_regular(f));
  CHECK(one_var_regularity_check(f));
  CHECK(is_slice_wrt(f, K1));
  CHECK_FALSE(is_slice_wrt(f, K2));  // F_{1,2} != 0 has 1 < 2 in front of x2
  CHECK(is_circular_wrt(spherical_derivative(f, 1), K1));
  CHECK(is_slice_preserving(f));
  CHECK_FALSE(is_slice_preserving(parse_slice_function("x1 e1", 5, 2)));
  SliceFunction circ = fn(3, 2, {{E, poly(3, 2, {{{1, 0, 2, 0}, 1}})}});
  for (SubsetMask h = 0; h < 4; ++h) CHECK(is_circular_wrt(circ, h));
  CHECK(one_var_regularity_check(constant_function(3, 2, e(3, 1))));
  // CR fails in variable 2 only
  SliceFunction bad = fn(3, 2, {{K2, poly(3, 2, {{{0, 0, 0, 1}, 1}})}});
  CHECK(is_slice_regular_wrt(bad, 1));
  CHECK_FALSE(is_slice_regular(bad));
  CHECK_FALSE(one_var_regularity_check(bad));
}

TEST_CASE("representation formula") {
  SliceFunction f = parse_slice_function("x1^2", 3, 1);
  MultivectorQ r = representation_eval<Rational>(f, e(3, 3), e(3, 1), e(3, 2), Rational(1), Rational(2));
  CHECK(r == evaluate<Rational>(f, PointQ{sc(3, Rational(1)) + Rational(2) * e(3, 3)}));
  CHECK(representation_eval<Rational>(f, e(3, 1), e(3, 1), e(3, 2), Rational(1), Rational(2)) ==
        evaluate<Rational>(f, PointQ{sc(3, Rational(1)) + Rational(2) * e(3, 1)}));
  SliceFunction circ = spherical_value(parse_slice_function("x1^3 e2", 3, 1), 1);
  CHECK(representation_eval<Rational>(circ, e(3, 3), e(3, 1), e(3, 2), q(1, 2), Rational(3)) ==
        representation_eval<Rational>(circ, -e(3, 3), e(3, 1), e(3, 2), q(1, 2), Rational(3)));
  CHECK_THROWS_AS(representation_eval<Rational>(f, e(3, 3), e(3, 1), e(3, 1), Rational(1), Rational(1)), ZeroNorm);
}

TEST_CASE("property: representation formula on general functions") {
  Gen g(304);
  for (int i = 0; i < 30; ++i) {
    int m = g.odd_dim();
    SliceFunction f = g.general(m, 1);
    for (const auto& p : points(1, m, 2, 4000 + i)) {
      auto parts = paravector_parts(p[0]);
      MultivectorQ I = *parts.unit;
      // J and K: two more rational units from other samples
      auto others = points(1, m, 2, 5000 + i);
      MultivectorQ J = *paravector_parts(others[0][0]).unit, K = *paravector_parts(others[1][0]).unit;
      if (J == K) continue;
      REQUIRE(representation_eval<Rational>(f, I, J, K, parts.alpha, *parts.beta) == evaluate<Rational>(f, p));
    }
  }
}

TEST_CASE("property: decomposition identity and Leibniz rule") {
  Gen g(305);
  for (int i = 0; i < 50; ++i) {
    int m = g.odd_dim(), n = g.range(1, 3);
    SliceFunction f = g.general(m, n, 3), k = g.general(m, n, 3);
    for (int h = 1; h <= n; ++h) {
      SliceFunction v = spherical_value(f, h), d = spherical_derivative(f, h);
      REQUIRE(f == v + slice_product(imaginary_coordinate(m, n, h), d));
      REQUIRE(spherical_value(v, h) == v);
      REQUIRE(spherical_derivative(d, h).is_zero());
      REQUIRE(spherical_derivative(slice_product(f, k), h) ==
              slice_product(d, spherical_value(k, h)) + slice_product(v, spherical_derivative(k, h)));
    }
  }
}

TEST_CASE("property: spherical value and derivative by evaluation") {
  Gen g(306);
  for (int i = 0; i < 30; ++i) {
    int m = g.odd_dim(), n = g.range(1, 2);
    SliceFunction f = g.general(m, n, 3);
    for (int h = 1; h <= n; ++h) {
      SliceFunction v = spherical_value(f, h), d = spherical_derivative(f, h);
      bool slice_h = is_slice_wrt(f, singleton(h));
      for (const auto& x : points(n, m, 3, 6000 + i)) {
        MultivectorQ fx = evaluate<Rational>(f, x), fc = evaluate<Rational>(f, conjugate_coordinate(x, h));
        REQUIRE(evaluate<Rational>(v, x) == (fx + fc) * q(1, 2));
        if (slice_h) REQUIRE(evaluate<Rational>(d, x) == vector_inverse(grade_project(x[h - 1], 1) * Rational(2)) * (fx - fc));
      }
    }
  }
}

TEST_CASE("property: vanishing of mixed derivatives") {
  // f slice wrt x_h and H containing h plus something before h: f'_{s,H} = 0
  Gen g(307);
  for (int i = 0; i < 40; ++i) {
    int m = g.odd_dim();
    SliceFunction f = g.circular_prefix(m, 3, 2);
    REQUIRE(is_slice_wrt(f, K2));
    REQUIRE(spherical_derivative(f, K12).is_zero());
    REQUIRE(spherical_derivative(f, K12 | 4).is_zero());
  }
}

TEST_CASE("property: spherical operators keep holomorphy in other variables") {
  Gen g(308);
  for (int i = 0; i < 40; ++i) {
    int m = g.odd_dim(), n = g.range(2, 3);
    SliceFunction f = g.regular(m, n, 4);
    for (int h = 1; h <= n; ++h)
      for (int t = 1; t <= n; ++t) {
        if (t == h) continue;
        REQUIRE(holomorphy_check(spherical_value(f, h).stem(), t));
        REQUIRE(holomorphy_check(spherical_derivative(f, h).stem(), t));
      }
  }
}

TEST_CASE("property: slice product against pointwise product on circular prefixes") {
  Gen g(309);
  for (int i = 0; i < 30; ++i) {
    int m = g.odd_dim(), n = g.range(1, 3), h = g.range(1, n);
    SliceFunction f = spherical_value(g.general(m, n, 3), h > 1 ? prefix_set(h - 1) : SubsetMask{0});
    REQUIRE(is_circular_wrt(f, prefix_set(h - 1)));
    SliceFunction prod = slice_product(coordinate(m, n, h), f);
    for (const auto& x : points(n, m, 3, 7000 + i)) REQUIRE(evaluate<Rational>(prod, x) == x[h - 1] * evaluate<Rational>(f, x));
  }
}

TEST_CASE("pointwise product differs without circularity") {
  // x2 . (x1 e?) : J_1 does not commute with x2
  SliceFunction f = parse_slice_function("x1", 3, 2);
  SliceFunction prod = slice_product(coordinate(3, 2, 2), f);
  auto xs = points(2, 3, 5, 8000);
  bool differs = false;
  for (const auto& x : xs) differs |= !(evaluate<Rational>(prod, x) == x[1] * evaluate<Rational>(f, x));
  CHECK(differs);
}

TEST_CASE("property: one-variable regularity check agrees with slice regularity") {
  Gen g(310);
  int regular = 0;
  for (int i = 0; i < 60; ++i) {
    int m = g.odd_dim(), n = g.range(1, 3);
    SliceFunction f = g.coin() ? g.regular(m, n, 4) : g.general(m, n, 3);
    REQUIRE(one_var_regularity_check(f) == is_slice_regular(f));
    regular += is_slice_regular(f);
  }
  CHECK(regular > 10);
}

TEST_CASE("pole handling") {
  SliceFunction d = SliceFunction(divide_beta_exact(parse_slice_function("x1^2", 3, 1).stem(), 1, 2));
  CHECK_THROWS_AS(evaluate<Rational>(d, PointQ{sc(3, Rational(1))}), PoleError);
}
