#include "slicewb/harmonic.hpp"

#include <set>
#include <sstream>

namespace slicewb {

namespace {

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sum_j c_j beta_h^{shift_j} d^{order_j}_{beta_h} p
LaurentPoly beta_weighted_sum(const LaurentPoly& p, int h, int k, int upper, int exp_offset, int deriv_offset) {
  LaurentPoly acc(p.dim(), p.nvars());
  for (int j = 1; j <= upper; ++j) {
    LaurentPoly term = p.derivative(beta_var(h), j + deriv_offset).shift(beta_var(h), j + exp_offset);
    acc += coefficient_a(k, j) * term;
  }
  return acc;
}

void require_holomorphic(const SliceFunction& f, int h, const char* who) {
  if (!holomorphy_check(f.stem(), h))
    throw PreconditionError(std::string(who) + ": f is not in the kernel of d/dx_h^c");
}

}  // namespace

int sce_exponent(int m) {
  check_algebra_dim(m);
  return (m - 1) / 2;
}

Rational coefficient_a(int k, int j) {
  if (j < 1 || j > k) return Rational(0);
  mpz_class num = factorial(2 * k - j - 1);
  mpz_class den = factorial(j - 1) * factorial(k - j);
  mpz_class pow2 = mpz_class(1) << (k - j);
  Rational r(num, den * pow2);
  r.canonicalize();
  if ((k - j) % 2) r = -r;
  return r;
}

Rational laplacian_prefactor(int m, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r *= (m - 2 * i - 1);
  return r;
}

CoefficientTable::CoefficientTable(int k_max) : k_max_(k_max) {
  if (k_max < 1) throw std::invalid_argument("coefficient table needs k_max >= 1");
  rows_.resize(k_max + 1);
  for (int k = 1; k <= k_max; ++k) {
    rows_[k].resize(k + 1);
    for (int j = 1; j <= k; ++j) rows_[k][j] = coefficient_a(k, j);
  }
}

Rational CoefficientTable::at(int k, int j) const {
  if (k < 1 || k > k_max_ || j < 1 || j > k) return Rational(0);
  return rows_[k][j];
}

bool CoefficientTable::check_recursion() const {
  for (int k = 1; k < k_max_; ++k) {
    for (int j = 1; j <= k; ++j) {
      Rational sum = 0;
      for (int l = j; l <= k; ++l) {
        Rational term = ratio(factorial(l), factorial(j)) * at(k, l);
        sum += ((l - j) % 2) ? Rational(-term) : term;
      }
      if (sum != at(k + 1, j + 1)) return false;
    }
  }
  return true;
}

bool CoefficientTable::check_stepping() const {
  for (int k = 1; k < k_max_; ++k)
    for (int j = 1; j <= k + 1; ++j)
      if (at(k + 1, j) != at(k, j - 1) + Rational(j - 2 * k) * at(k, j)) return false;
  return true;
}

std::string CoefficientTable::to_csv() const {
  std::ostringstream os;
  for (int k = 1; k <= k_max_; ++k)
    for (int j = 1; j <= k; ++j) os << k << "," << j << ",\"" << to_string(at(k, j)) << "\"\n";
  return os.str();
}

SliceFunction laplacian(const SliceFunction& f, int h) {
  f.stem().check_variable(h);
  const int m = f.dim();
  const int a = alpha_var(h), b = beta_var(h);
  StemPolynomial out = f.stem().map_components([&](SubsetMask k, const LaurentPoly& p) {
    LaurentPoly r = p.derivative(a, 2) + p.derivative(b, 2) + Rational(m - 1) * p.derivative(b).shift(b, -1);
    // Delta J = (1 - m) beta^{-2} J for the unit J_h carried by the slot
    if (contains(k, h)) r -= Rational(m - 1) * p.shift(b, -2);
    return r;
  });
  return SliceFunction(std::move(out));
}

SliceFunction laplacian_power(const SliceFunction& f, int h, int k) {
  if (k < 0) throw std::invalid_argument("laplacian_power: negative power");
  SliceFunction g = f;
  for (int i = 0; i < k; ++i) {
    g = laplacian(g, h);
    if (g.is_zero()) break;
  }
  return g;
}

SliceFunction iterated_laplacian_closed_form(const SliceFunction& f, int h, int k, int variant) {
  f.stem().check_variable(h);
  if (k < 1) throw std::invalid_argument("closed form needs k >= 1");
  require_holomorphic(f, h, "iterated_laplacian_closed_form");
  const Rational pre = laplacian_prefactor(f.dim(), k);
  StemPolynomial out(f.dim(), f.nvars());
  if (variant == 1) {
    SliceFunction d = spherical_derivative(f, h);
    for (const auto& [slot, p] : d.stem().components())
      out.add(slot, pre * beta_weighted_sum(p, h, k, k, -2 * k, 0));
  } else if (variant == 2) {
    for (const auto& [slot, p] : f.stem().components()) {
      if (!contains(slot, h)) continue;
      out.add(slot & ~singleton(h), pre * beta_weighted_sum(p, h, k + 1, k + 1, -2 * k - 2, -1));
    }
  } else {
    throw std::invalid_argument("closed form variant must be 1 or 2");
  }
  return SliceFunction(std::move(out));
}

SliceFunction iterated_laplacian_sliceregular(const SliceFunction& f, int h, int k, int variant) {
  if (k < 0) throw std::invalid_argument("iterated_laplacian_sliceregular: negative k");
  require_holomorphic(f, h, "iterated_laplacian_sliceregular");
  SliceFunction inner = k == 0 ? spherical_derivative(f, h) : iterated_laplacian_closed_form(f, h, k, variant);
  return Rational(-2 * (f.dim() - 1)) * slice_derivative(inner, h);
}

SliceFunction slice_derivative(const SliceFunction& f, int h) { return SliceFunction(wirtinger(f.stem(), h)); }

namespace {

SliceFunction axial_dirac(const SliceFunction& f, int h, int sign) {
  f.stem().check_variable(h);
  if (!is_circular_wrt(f, prefix_set(h - 1)))
    throw PreconditionError("symbolic Dirac in x_" + std::to_string(h) + " needs f circular wrt {1.." +
                            std::to_string(h - 1) + "}");
  const int m = f.dim();
  const int a = alpha_var(h), b = beta_var(h);
  const SubsetMask bit = singleton(h);
  StemPolynomial out(m, f.nvars());
  std::set<SubsetMask> bases;
  for (const auto& [k, p] : f.stem().components()) bases.insert(k & ~bit);
  const Rational half(1, 2);
  for (SubsetMask base : bases) {
    LaurentPoly A = f.stem().component(base);
    LaurentPoly B = f.stem().component(base | bit);
    // dbar(A + J B) = 1/2[(A_a - B_b - (m-1)B/b) + J(A_b + B_a)]; d flips the beta terms
    LaurentPoly even = A.derivative(a) - Rational(sign) * (B.derivative(b) + Rational(m - 1) * B.shift(b, -1));
    LaurentPoly odd = Rational(sign) * A.derivative(b) + B.derivative(a);
    out.add(base, half * even);
    out.add(base | bit, half * odd);
  }
  return SliceFunction(std::move(out));
}

}  // namespace

SliceFunction dirac_symbolic(const SliceFunction& f, int h) { return axial_dirac(f, h, 1); }
SliceFunction dirac_conj_symbolic(const SliceFunction& f, int h) { return axial_dirac(f, h, -1); }

std::optional<int> polyharmonic_degree(const SliceFunction& f, int h, int k_max) {
  if (k_max < 1) throw std::invalid_argument("polyharmonic_degree: k_max >= 1");
  SliceFunction g = f;
  for (int k = 1; k <= k_max; ++k) {
    g = laplacian(g, h);
    if (g.is_zero()) return k;
  }
  return std::nullopt;
}

AxialProfile AxialProfile::from_poly(int m, LaurentPoly p) {
  if (p.nvars() != 2 || p.dim() != m) throw SignatureMismatch("axial profile must live in R_m[a, b^{+-1}]");
  return AxialProfile{m, std::move(p)};
}

AxialProfile AxialProfile::from_stem_slot(const StemPolynomial& f, SubsetMask k) {
  if (f.nvars() != 1) throw std::invalid_argument("axial profile from a one-variable stem only");
  return from_poly(f.dim(), f.component(k));
}

AxialProfile axial_laplacian(const AxialProfile& p) {
  const LaurentPoly& P = p.profile;
  LaurentPoly r = P.derivative(0, 2) + P.derivative(1, 2) + Rational(p.m - 1) * P.derivative(1).shift(1, -1);
  return AxialProfile{p.m, std::move(r)};
}

AxialProfile axial_laplacian_power(const AxialProfile& p, int k) {
  AxialProfile g = p;
  for (int i = 0; i < k; ++i) g = axial_laplacian(g);
  return g;
}

bool is_planar_harmonic(const AxialProfile& p) {
  return (p.profile.derivative(0, 2) + p.profile.derivative(1, 2)).is_zero();
}

PolyharmonicConstruction construct_polyharmonic(const AxialProfile& F, int gamma_limit) {
  if (!is_planar_harmonic(F)) throw PreconditionError("construct_polyharmonic: profile is not harmonic in (a, b)");
  const int gamma = gamma_limit < 0 ? sce_exponent(F.m) : gamma_limit;
  PolyharmonicConstruction out;
  out.f = AxialProfile{F.m, F.profile.shift(1, -1)};
  out.closed_form_matches = true;
  AxialProfile cur = out.f;
  for (int k = 0; k <= gamma; ++k) {
    if (k > 0) cur = axial_laplacian(cur);
    if (k < gamma) {
      LaurentPoly closed(F.m, 2);
      for (int j = 1; j <= k + 1; ++j)
        closed += coefficient_a(k + 1, j) * F.profile.derivative(1, j - 1).shift(1, j - 2 * k - 2);
      closed *= laplacian_prefactor(F.m, k);
      if (!(closed == cur.profile)) out.closed_form_matches = false;
    }
    if (!out.harmonic_degree && k > 0 && cur.profile.is_zero()) out.harmonic_degree = k;
  }
  out.polyharmonic = cur.profile.is_zero();
  if (gamma == 0) out.polyharmonic = out.f.profile.is_zero();
  return out;
}

LaurentPoly whitney_factor(const LaurentPoly& p, int var) {
  LaurentPoly out(p.dim(), p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] < 1 || e[var] % 2 == 0)
      throw PreconditionError("whitney_factor: monomial with even or negative degree in the odd variable");
    Exponents g = e;
    g[var] = static_cast<std::int16_t>((e[var] - 1) / 2);
    out.add_term(g, c);
  }
  return out;
}

SliceFunction whitney_laplacian(const SliceFunction& f, int h, int k) {
  f.stem().check_variable(h);
  const int b = beta_var(h);
  const Rational scale = Rational(mpz_class(1) << k) * laplacian_prefactor(f.dim(), k);
  StemPolynomial out(f.dim(), f.nvars());
  for (const auto& [slot, p] : f.stem().components()) {
    if (!contains(slot, h)) continue;
    LaurentPoly g = whitney_factor(p, b).derivative(b, k);
    // back to beta: c -> beta^2
    LaurentPoly back = g.map_terms([b](const Exponents& e, const MultivectorQ& c) {
      Exponents d = e;
      d[b] = static_cast<std::int16_t>(2 * e[b]);
      return std::optional(std::pair(d, c));
    });
    out.add(slot & ~singleton(h), scale * back);
  }
  return SliceFunction(std::move(out));
}

}  // namespace slicewb
