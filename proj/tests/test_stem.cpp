#include <doctest.h>

#include "support.hpp"

using namespace slicewb;
using namespace slicewb::testing;

namespace {

constexpr SubsetMask E = 0, K1 = 1, K2 = 2, K12 = 3;

// x^4 written out by hand
StemPolynomial x4_stem(int m) {
  return stem(m, 1, {{E, poly(m, 1, {{{4, 0}, 1}, {{2, 2}, -6}, {{0, 4}, 1}})},
                     {K1, poly(m, 1, {{{3, 1}, 4}, {{1, 3}, -4}})}});
}

}  // namespace

TEST_CASE("parity validation") {
  CHECK(validate_stem(stem(3, 1, {{E, poly(3, 1, {{{2, 0}, 1}})}, {K1, poly(3, 1, {{{1, 1}, 1}})}})));
  CHECK_FALSE(validate_stem(stem(3, 1, {{E, poly(3, 1, {{{0, 1}, 1}})}})));
  CHECK(validate_stem(stem(5, 2, {{E, poly(5, 2, {{{0, 0, 4, 0}, 1}, {{0, 0, 2, 2}, -6}, {{0, 0, 0, 4}, 1}})},
                                  {K2, poly(5, 2, {{{0, 0, 3, 1}, 4}, {{0, 0, 1, 3}, -4}})}})));
  // Laurent exponents follow the same law
  CHECK(validate_stem(stem(3, 1, {{K1, poly(3, 1, {{{0, -1}, 1}})}})));
  CHECK_FALSE(validate_stem(stem(3, 1, {{K1, poly(3, 1, {{{0, -2}, 1}})}})));
}

TEST_CASE("tensor product") {
  StemPolynomial z = coordinate_stem(3, 1, 1);
  CHECK(stem_tensor(z, z) == stem(3, 1, {{E, poly(3, 1, {{{2, 0}, 1}, {{0, 2}, -1}})}, {K1, poly(3, 1, {{{1, 1}, 2}})}}));

  MultivectorQ c = MultivectorQ::scalar(3, q(2, 3)) + MultivectorQ::generator(3, 2);
  StemPolynomial zc = stem_tensor(z, StemPolynomial::constant(1, c));
  CHECK(zc.component(E) == poly(3, 1, {{{1, 0}, 1}}).right_mul(c));
  CHECK(zc.component(K1) == poly(3, 1, {{{0, 1}, 1}}).right_mul(c));

  auto a = StemPolynomial::constant(1, MultivectorQ::generator(3, 1));
  auto b = StemPolynomial::constant(1, MultivectorQ::generator(3, 2));
  CHECK(stem_tensor(a, b) == StemPolynomial::constant(1, MultivectorQ::basis(3, 0b011)));
  CHECK(stem_tensor(b, a) == StemPolynomial::constant(1, -MultivectorQ::basis(3, 0b011)));
  CHECK_THROWS_AS(stem_tensor(z, coordinate_stem(5, 1, 1)), SignatureMismatch);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_beta(stem(3, 1, {{K1, poly(3, 1, {{{1, 1}, 1}})}}), 1) == stem(3, 1, {{K1, poly(3, 1, {{{1, 0}, 1}})}}));
  StemPolynomial x4_2 = stem(5, 2, {{E, poly(5, 2, {{{0, 0, 4, 0}, 1}, {{0, 0, 2, 2}, -6}, {{0, 0, 0, 4}, 1}})}});
  CHECK(partial_alpha(x4_2, 2) == stem(5, 2, {{E, poly(5, 2, {{{0, 0, 3, 0}, 4}, {{0, 0, 1, 2}, -12}})}}));
  CHECK(partial_beta(stem(3, 1, {{K1, poly(3, 1, {{{0, -1}, 1}})}}), 1) ==
        stem(3, 1, {{K1, poly(3, 1, {{{0, -2}, -1}})}}));
  CHECK_THROWS(partial_alpha(x4_2, 3));
}

TEST_CASE("exact beta division") {
  CHECK(divide_beta_exact(poly(3, 1, {{{3, 1}, 4}, {{1, 3}, -4}}), 1) == poly(3, 1, {{{3, 0}, 4}, {{1, 2}, -4}}));
  CHECK(divide_beta_exact(poly(3, 1, {{{0, 1}, 1}}), 1) == poly(3, 1, {{{0, 0}, 1}}));
  CHECK(divide_beta_exact(poly(3, 2, {{{0, 0, 1, 3}, 1}}), 2, 2) == poly(3, 2, {{{0, 0, 1, 1}, 1}}));
}

TEST_CASE("Wirtinger operators") {
  StemPolynomial z = coordinate_stem(5, 1, 1);
  CHECK(wirtinger_conj(z, 1).is_zero());
  CHECK(wirtinger(z, 1) == StemPolynomial::constant(1, MultivectorQ::scalar(5, Rational(1))));
  StemPolynomial z2 = stem_tensor(z, z);
  CHECK(wirtinger(z2, 1) == stem(5, 1, {{E, poly(5, 1, {{{1, 0}, 2}})}, {K1, poly(5, 1, {{{0, 1}, 2}})}}));
  // conjugate coordinate is anti-holomorphic
  CHECK(wirtinger(conjugate_coordinate_stem(5, 1, 1), 1).is_zero());
}

TEST_CASE("holomorphy") {
  StemPolynomial f = monomial_stem({4, 7}, MultivectorQ::scalar(5, Rational(1)));
  CHECK(holomorphy_check(f, 1));
  CHECK(holomorphy_check(f, 2));
  CHECK_FALSE(holomorphy_check(stem(3, 1, {{E, poly(3, 1, {{{1, 0}, 1}})}}), 1));
  CHECK(holomorphy_check(StemPolynomial::constant(2, MultivectorQ::generator(3, 2)), 2));
}

TEST_CASE("monomial stems") {
  MultivectorQ one = MultivectorQ::scalar(5, Rational(1));
  CHECK(monomial_stem({4}, one) == x4_stem(5));
  CHECK(monomial_stem({0, 0}, MultivectorQ::generator(5, 3)) ==
        StemPolynomial::constant(2, MultivectorQ::generator(5, 3)));

  // x1^4 x2^7: the four real components are products of the one-variable parts
  StemPolynomial f = monomial_stem({4, 7}, one);
  LaurentPoly a_e = poly(5, 2, {{{4, 0}, 1}, {{2, 2}, -6}, {{0, 4}, 1}});
  LaurentPoly a_o = poly(5, 2, {{{3, 1}, 4}, {{1, 3}, -4}});
  LaurentPoly b_e = poly(5, 2, {{{0, 0, 7, 0}, 1}, {{0, 0, 5, 2}, -21}, {{0, 0, 3, 4}, 35}, {{0, 0, 1, 6}, -7}});
  LaurentPoly b_o = poly(5, 2, {{{0, 0, 6, 1}, 7}, {{0, 0, 4, 3}, -35}, {{0, 0, 2, 5}, 21}, {{0, 0, 0, 7}, -1}});
  CHECK(f.component(E) == a_e * b_e);
  CHECK(f.component(K1) == a_o * b_e);
  CHECK(f.component(K2) == a_e * b_o);
  CHECK(f.component(K12) == a_o * b_o);
}

TEST_CASE("complex structure") {
  Gen g(201);
  for (int i = 0; i < 60; ++i) {
    int n = g.range(1, 3);
    StemPolynomial f = g.general(g.odd_dim(), n).stem();
    for (int h = 1; h <= n; ++h) {
      REQUIRE(complex_structure(complex_structure(f, h), h) == -f);
      for (int k = 1; k <= n; ++k)
        REQUIRE(complex_structure(complex_structure(f, h), k) == complex_structure(complex_structure(f, k), h));
    }
  }
}

TEST_CASE("property: parity closure") {
  Gen g(202);
  for (int i = 0; i < 80; ++i) {
    int m = g.odd_dim(), n = g.range(1, 3);
    StemPolynomial f = g.general(m, n).stem(), h = g.general(m, n).stem();
    REQUIRE(validate_stem(stem_tensor(f, h)));
    for (int v = 1; v <= n; ++v) {
      REQUIRE(validate_stem(wirtinger(f, v)));
      REQUIRE(validate_stem(wirtinger_conj(f, v)));
    }
  }
}

TEST_CASE("property: holomorphy survives tensor products") {
  Gen g(203);
  for (int i = 0; i < 60; ++i) {
    int m = g.odd_dim(), n = g.range(1, 3);
    StemPolynomial a = g.regular(m, n, 4).stem(), b = g.regular(m, n, 4).stem();
    StemPolynomial ab = stem_tensor(a, b);
    for (int h = 1; h <= n; ++h) {
      REQUIRE(holomorphy_check(ab, h));
      REQUIRE(wirtinger_conj(ab, h).is_zero());
    }
  }
}

TEST_CASE("property: tensor product is associative and bilinear") {
  Gen g(204);
  for (int i = 0; i < 40; ++i) {
    int m = g.odd_dim(), n = g.range(1, 2);
    StemPolynomial a = g.general(m, n, 3).stem(), b = g.general(m, n, 3).stem(), c = g.general(m, n, 3).stem();
    REQUIRE(stem_tensor(stem_tensor(a, b), c) == stem_tensor(a, stem_tensor(b, c)));
    REQUIRE(stem_tensor(a, b + c) == stem_tensor(a, b) + stem_tensor(a, c));
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(poly(3, 1, {{{3, 1}, 4}, {{1, 3}, -4}})) == "4*a1^3*b1 - 4*a1*b1^3");
  CHECK(to_string(x4_stem(3)) == "F{} = a1^4 - 6*a1^2*b1^2 + b1^4\nF{1} = 4*a1^3*b1 - 4*a1*b1^3\n");
}
