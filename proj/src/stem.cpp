#include "slicewb/stem.hpp"

#include <bit>
#include <sstream>

namespace slicewb {

std::string subset_to_string(SubsetMask k) {
  std::string out = "{";
  bool first = true;
  for (int h : subset_elements(k)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(h);
  }
  return out + "}";
}

std::vector<int> subset_elements(SubsetMask k) {
  std::vector<int> out;
  for (int h = 1; k != 0; ++h, k >>= 1)
    if (k & 1u) out.push_back(h);
  return out;
}

SubsetMask subset_from(const std::vector<int>& elems, int n) {
  SubsetMask k = 0;
  for (int h : elems) {
    if (h < 1 || h > n) throw std::invalid_argument("subset element " + std::to_string(h) + " outside 1.." + std::to_string(n));
    k |= singleton(h);
  }
  return k;
}

StemPolynomial::StemPolynomial(int m, int n) : m_(m), n_(n) {
  check_algebra_dim(m);
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("stem: number of variables must lie in 1.." + std::to_string(kMaxVariables));
}

StemPolynomial StemPolynomial::constant(int n, const MultivectorQ& c) {
  StemPolynomial f(c.dim(), n);
  f.add(0, LaurentPoly::constant(2 * n, c));
  return f;
}

StemPolynomial StemPolynomial::from_component(int n, SubsetMask k, const LaurentPoly& p) {
  StemPolynomial f(p.dim(), n);
  f.add(k, p);
  return f;
}

const LaurentPoly* StemPolynomial::find(SubsetMask k) const {
  auto it = comps_.find(k);
  return it == comps_.end() ? nullptr : &it->second;
}

LaurentPoly StemPolynomial::component(SubsetMask k) const {
  if (const auto* p = find(k)) return *p;
  return zero_poly();
}

void StemPolynomial::add(SubsetMask k, const LaurentPoly& p) {
  if (k & ~full_set(n_)) throw std::invalid_argument("stem slot " + subset_to_string(k) + " outside 1..n");
  if (p.dim() != m_ || p.nvars() != 2 * n_) throw SignatureMismatch("stem component over the wrong ring");
  if (p.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

void StemPolynomial::set(SubsetMask k, LaurentPoly p) {
  comps_.erase(k);
  add(k, p);
}

std::vector<SubsetMask> StemPolynomial::support() const {
  std::vector<SubsetMask> out;
  for (const auto& [k, p] : comps_) out.push_back(k);
  return out;
}

StemPolynomial& StemPolynomial::operator+=(const StemPolynomial& o) {
  check_same(o);
  for (const auto& [k, p] : o.comps_) add(k, p);
  return *this;
}

StemPolynomial& StemPolynomial::operator-=(const StemPolynomial& o) {
  check_same(o);
  for (const auto& [k, p] : o.comps_) add(k, -p);
  return *this;
}

StemPolynomial& StemPolynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [k, p] : comps_) p *= s;
  return *this;
}

bool StemPolynomial::is_polynomial() const {
  for (const auto& [k, p] : comps_)
    if (!p.is_polynomial()) return false;
  return true;
}

bool StemPolynomial::is_real() const {
  for (const auto& [k, p] : comps_)
    if (!p.is_real()) return false;
  return true;
}

void StemPolynomial::check_same(const StemPolynomial& o) const {
  if (m_ != o.m_ || n_ != o.n_)
    throw SignatureMismatch("stems over (m,n) = (" + std::to_string(m_) + "," + std::to_string(n_) + ") and (" +
                            std::to_string(o.m_) + "," + std::to_string(o.n_) + ")");
}

void StemPolynomial::check_variable(int h) const {
  if (h < 1 || h > n_) throw std::invalid_argument("variable index " + std::to_string(h) + " outside 1.." + std::to_string(n_));
}

bool validate_stem(const StemPolynomial& f) {
  for (const auto& [k, p] : f.components()) {
    for (const auto& [e, c] : p.terms()) {
      for (int h = 1; h <= f.nvars(); ++h) {
        int parity = e[beta_var(h)] & 1;  // & 1 is fine for negatives in two's complement
        if (parity != (contains(k, h) ? 1 : 0)) return false;
      }
    }
  }
  return true;
}

StemPolynomial stem_tensor(const StemPolynomial& f, const StemPolynomial& g) {
  f.check_same(g);
  StemPolynomial out(f.dim(), f.nvars());
  for (const auto& [h, fh] : f.components()) {
    for (const auto& [k, gk] : g.components()) {
      LaurentPoly prod = fh * gk;
      if (std::popcount(h & k) & 1) prod *= Rational(-1);
      out.add(h ^ k, prod);
    }
  }
  return out;
}

StemPolynomial partial_alpha(const StemPolynomial& f, int h) {
  f.check_variable(h);
  return f.map_components([h](SubsetMask, const LaurentPoly& p) { return p.derivative(alpha_var(h)); });
}

StemPolynomial partial_beta(const StemPolynomial& f, int h) {
  f.check_variable(h);
  return f.map_components([h](SubsetMask, const LaurentPoly& p) { return p.derivative(beta_var(h)); });
}

LaurentPoly divide_beta_exact(const LaurentPoly& p, int h, int power) { return p.shift(beta_var(h), -power); }

StemPolynomial divide_beta_exact(const StemPolynomial& f, int h, int power) {
  f.check_variable(h);
  return f.map_components([&](SubsetMask, const LaurentPoly& p) { return divide_beta_exact(p, h, power); });
}

StemPolynomial complex_structure(const StemPolynomial& f, int h) {
  f.check_variable(h);
  StemPolynomial out(f.dim(), f.nvars());
  SubsetMask bit = singleton(h);
  for (const auto& [k, p] : f.components()) {
    // G_K feeds slot K xor h; it enters with a minus sign when it carries h.
    if (k & bit)
      out.add(k & ~bit, -p);
    else
      out.add(k | bit, p);
  }
  return out;
}

StemPolynomial wirtinger(const StemPolynomial& f, int h) {
  StemPolynomial r = partial_alpha(f, h) - complex_structure(partial_beta(f, h), h);
  return r * Rational(1, 2);
}

StemPolynomial wirtinger_conj(const StemPolynomial& f, int h) {
  StemPolynomial r = partial_alpha(f, h) + complex_structure(partial_beta(f, h), h);
  return r * Rational(1, 2);
}

bool holomorphy_check(const StemPolynomial& f, int h) { return wirtinger_conj(f, h).is_zero(); }

StemPolynomial coordinate_stem(int m, int n, int h) {
  StemPolynomial f(m, n);
  f.check_variable(h);
  f.add(0, LaurentPoly::variable(m, 2 * n, alpha_var(h)));
  f.add(singleton(h), LaurentPoly::variable(m, 2 * n, beta_var(h)));
  return f;
}

StemPolynomial conjugate_coordinate_stem(int m, int n, int h) {
  StemPolynomial f(m, n);
  f.check_variable(h);
  f.add(0, LaurentPoly::variable(m, 2 * n, alpha_var(h)));
  f.add(singleton(h), -LaurentPoly::variable(m, 2 * n, beta_var(h)));
  return f;
}

StemPolynomial monomial_stem(const std::vector<int>& exponents, const MultivectorQ& c) {
  int n = static_cast<int>(exponents.size());
  int m = c.dim();
  StemPolynomial acc = StemPolynomial::constant(n, MultivectorQ::scalar(m, Rational(1)));
  for (int h = 1; h <= n; ++h) {
    int l = exponents[h - 1];
    if (l < 0) throw std::invalid_argument("monomial_stem: negative exponent");
    StemPolynomial z = coordinate_stem(m, n, h);
    for (int i = 0; i < l; ++i) acc = stem_tensor(acc, z);
  }
  return stem_tensor(acc, StemPolynomial::constant(n, c));
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  auto var_name = [&](int v) {
    if (v < static_cast<int>(names.size())) return names[v];
    return std::string(v % 2 == 0 ? "a" : "b") + std::to_string(v / 2 + 1);
  };
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (int v = 0; v < p.nvars(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    std::string coeff;
    bool neg = false;
    if (c.is_real()) {
      Rational q = c.scalar_part();
      neg = sgn(q) < 0;
      Rational a = neg ? Rational(-q) : q;
      if (a != 1 || mono.empty()) coeff = a.get_str();
    } else {
      coeff = "(" + to_string(c) + ")";
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (!coeff.empty() && !mono.empty())
      out += coeff + "*" + mono;
    else
      out += coeff + mono;
  }
  return out;
}

std::string to_string(const StemPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (const auto& [k, p] : f.components()) os << "F" << subset_to_string(k) << " = " << to_string(p) << "\n";
  return os.str();
}

}  // namespace slicewb
