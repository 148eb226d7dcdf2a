#include "slicewb/laurent_poly.hpp"

#include <numeric>

namespace slicewb {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

LaurentPoly::LaurentPoly(int m, int nvars) : m_(m), nvars_(nvars) {
  check_algebra_dim(m);
  if (nvars < 0 || nvars > kMaxPolyVars) throw std::invalid_argument("LaurentPoly: too many variables");
}

LaurentPoly LaurentPoly::constant(int nvars, const MultivectorQ& c) {
  LaurentPoly p(c.dim(), nvars);
  p.add_term(Exponents{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& e, const MultivectorQ& c) {
  LaurentPoly p(c.dim(), nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int m, int nvars, int var, int power) {
  Exponents e{};
  e[var] = static_cast<std::int16_t>(power);
  return monomial(nvars, e, MultivectorQ::scalar(m, Rational(1)));
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (m_ != o.m_ || nvars_ != o.nvars_) throw SignatureMismatch("LaurentPoly signature mismatch");
}

void LaurentPoly::add_term(const Exponents& e, const MultivectorQ& c) {
  if (c.is_zero()) return;
  if (c.dim() != m_) throw SignatureMismatch("LaurentPoly coefficient over the wrong algebra");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly out(a.m_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (int v = 0; v < a.nvars_; ++v) e[v] = static_cast<std::int16_t>(ea[v] + eb[v]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::left_mul(const MultivectorQ& c) const {
  LaurentPoly out(m_, nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, c * v);
  return out;
}

LaurentPoly LaurentPoly::right_mul(const MultivectorQ& c) const {
  LaurentPoly out(m_, nvars_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::derivative(int var, int order) const {
  LaurentPoly cur = *this;
  for (int k = 0; k < order; ++k) {
    LaurentPoly next(m_, nvars_);
    for (const auto& [e, c] : cur.terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] = static_cast<std::int16_t>(e[var] - 1);
      next.add_term(d, c * Rational(e[var]));
    }
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly LaurentPoly::shift(int var, int power) const {
  LaurentPoly out(m_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    s[var] = static_cast<std::int16_t>(e[var] + power);
    out.terms_.emplace(s, c);
  }
  return out;
}

std::optional<int> LaurentPoly::min_exponent(int var) const {
  std::optional<int> r;
  for (const auto& [e, c] : terms_)
    if (!r || e[var] < *r) r = e[var];
  return r;
}

std::optional<int> LaurentPoly::max_exponent(int var) const {
  std::optional<int> r;
  for (const auto& [e, c] : terms_)
    if (!r || e[var] > *r) r = e[var];
  return r;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < nvars_; ++v)
      if (e[v] < 0) return false;
  return true;
}

bool LaurentPoly::is_real() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

LaurentPoly LaurentPoly::map_terms(
    const std::function<std::optional<std::pair<Exponents, MultivectorQ>>(const Exponents&, const MultivectorQ&)>& fn)
    const {
  LaurentPoly out(m_, nvars_);
  for (const auto& [e, c] : terms_)
    if (auto t = fn(e, c)) out.add_term(t->first, t->second);
  return out;
}

}  // namespace slicewb
