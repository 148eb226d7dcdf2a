#include "slicewb/almansi.hpp"

namespace slicewb {

namespace {

SliceFunction norm_power(int m, int n, int var, int j) {
  SliceFunction r = constant_function(m, n, MultivectorQ::scalar(m, Rational(1)));
  SliceFunction sq = squared_norm(m, n, var);
  for (int i = 0; i < j; ++i) r = slice_product(r, sq);
  return r;
}

}  // namespace

SliceFunction scale_integral(const SliceFunction& g, int var, int j) {
  g.stem().check_variable(var);
  const int m = g.dim();
  const int a = alpha_var(var), b = beta_var(var);
  StemPolynomial out = g.stem().map_components([&](SubsetMask, const LaurentPoly& p) {
    return p.map_terms([&](const Exponents& e, const MultivectorQ& c) {
      int d = e[a] + e[b];
      // the integrand is xi^{d + j - 2 + (m+1)/2}
      int denom = d + j - 1 + (m + 1) / 2;
      if (denom <= 0) throw PreconditionError("scale integral diverges for a monomial of degree " + std::to_string(d));
      return std::optional(std::pair(e, c * Rational(1, denom)));
    });
  });
  return SliceFunction(std::move(out));
}

SliceFunction almansi_reconstruct(const std::vector<SliceFunction>& components, int var) {
  if (components.empty()) throw std::invalid_argument("almansi_reconstruct: no components");
  const int m = components[0].dim(), n = components[0].nvars();
  SliceFunction acc(StemPolynomial(m, n));
  for (std::size_t j = 0; j < components.size(); ++j)
    acc = acc + slice_product(norm_power(m, n, var, static_cast<int>(j)), components[j]);
  return acc;
}

ClassicalAlmansiResult classical_almansi(const SliceFunction& f, int var, int p) {
  f.stem().check_variable(var);
  const int m = f.dim(), n = f.nvars();
  if (p < 1 || p > sce_exponent(m) + 1)
    throw PreconditionError("classical_almansi: degree must lie in 1..gamma_m+1 = " + std::to_string(sce_exponent(m) + 1));
  if (!laplacian_power(f, var, p).is_zero())
    throw PreconditionError("classical_almansi: f is not " + std::to_string(p) + "-polyharmonic in x_" + std::to_string(var));

  ClassicalAlmansiResult r;
  r.var = var;
  r.degree = p;
  if (p == 1) {
    r.components = {f};
  } else {
    ClassicalAlmansiResult inner = classical_almansi(laplacian(f, var), var, p - 1);
    r.components.resize(p, SliceFunction(StemPolynomial(m, n)));
    SliceFunction rest = f;
    for (int j = 1; j < p; ++j) {
      r.components[j] = Rational(1, 4 * j) * scale_integral(inner.components[j - 1], var, j);
      rest = rest - slice_product(norm_power(m, n, var, j), r.components[j]);
    }
    r.components[0] = rest;
  }
  r.reconstruction_exact = almansi_reconstruct(r.components, var) == f;
  r.components_harmonic = true;
  for (const auto& h : r.components)
    if (!laplacian(h, var).is_zero()) r.components_harmonic = false;
  return r;
}

mpz_class double_factorial(int n) {
  if (n < -1) throw DoubleFactorialRange("double factorial of " + std::to_string(n) + " is outside the (-1)!! = 1 convention");
  mpz_class r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

std::optional<int> homogeneous_degree(const SliceFunction& f, int var) {
  std::optional<int> deg;
  for (const auto& [k, p] : f.stem().components()) {
    for (const auto& [e, c] : p.terms()) {
      int d = e[alpha_var(var)] + e[beta_var(var)];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
  }
  return deg ? deg : std::optional<int>(0);
}

std::vector<SliceFunction> gauss_canonical(const SliceFunction& p, int var) {
  p.stem().check_variable(var);
  auto deg = homogeneous_degree(p, var);
  if (!deg) throw PreconditionError("gauss_canonical: input is not homogeneous in x_" + std::to_string(var));
  if (!p.stem().is_polynomial()) throw PreconditionError("gauss_canonical: polynomial input required");
  const int m = p.dim(), n = p.nvars(), N = *deg;
  std::vector<SliceFunction> out;
  for (int k = 0; 2 * k <= N; ++k) {
    Rational outer(double_factorial(m + 2 * N - 4 * k - 1), double_factorial(2 * k) * double_factorial(m + 2 * N - 2 * k - 1));
    outer.canonicalize();
    SliceFunction hk(StemPolynomial(m, n));
    SliceFunction lap = laplacian_power(p, var, k);
    for (int j = 0; 2 * (j + k) <= N; ++j) {
      Rational inner(double_factorial(m + 2 * N - 4 * k - 2 * j - 3),
                     double_factorial(2 * j) * double_factorial(m + 2 * N - 4 * k - 3));
      inner.canonicalize();
      if (j % 2) inner = -inner;
      hk = hk + (outer * inner) * slice_product(norm_power(m, n, var, j), lap);
      lap = laplacian(lap, var);
    }
    out.push_back(hk);
  }
  return out;
}

}  // namespace slicewb
