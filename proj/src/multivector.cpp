#include "slicewb/multivector.hpp"

#include <sstream>

namespace slicewb {

namespace {

template <class S, class Fmt>
std::string format_terms(const Multivector<S>& x, Fmt fmt) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, v] : x.terms()) {
    bool neg = v < 0;
    S mag = neg ? S(-v) : v;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string coeff = fmt(mag);
    if (b == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += blade_to_string(b, x.dim());
    }
  }
  return out;
}

}  // namespace

std::string to_string(const MultivectorQ& x) {
  return format_terms(x, [](const Rational& q) { return q.get_str(); });
}

std::string to_string(const MultivectorF& x) {
  return format_terms(x, [](double d) {
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
  });
}

}  // namespace slicewb
