#include "slicewb/blade.hpp"

#include <cctype>
#include <stdexcept>

#include "slicewb/errors.hpp"

namespace slicewb {

std::string blade_to_string(Blade b, int m) {
  if (b == 0) return "1";
  std::string out = "e";
  if (m <= 9) {
    for (int i = 1; i <= m; ++i)
      if (b & generator(i)) out += static_cast<char>('0' + i);
    return out;
  }
  out += '{';
  bool first = true;
  for (int i = 1; i <= m; ++i) {
    if (!(b & generator(i))) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

Blade parse_blade(std::string_view text, int m) {
  if (text == "1") return 0;
  if (text.size() < 2 || text.front() != 'e') throw std::invalid_argument("malformed blade '" + std::string(text) + "'");
  std::string_view body = text.substr(1);
  Blade b = 0;
  int last = 0;
  auto push = [&](int idx) {
    if (idx < 1 || idx > m)
      throw std::invalid_argument("blade index " + std::to_string(idx) + " outside 1.." + std::to_string(m));
    if (idx <= last) throw std::invalid_argument("blade indices must ascend in '" + std::string(text) + "'");
    b |= generator(idx);
    last = idx;
  };
  if (body.front() == '{') {
    if (body.back() != '}') throw std::invalid_argument("unterminated blade '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("empty index in '" + std::string(text) + "'");
      int idx = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("malformed blade '" + std::string(text) + "'");
        idx = idx * 10 + (c - '0');
      }
      push(idx);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return b;
  }
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      throw std::invalid_argument("malformed blade '" + std::string(text) + "'");
    push(c - '0');
  }
  return b;
}

void check_algebra_dim(int m) {
  if (m == 1) throw DegenerateDimension("m = 1 gives gamma_m = 0; the algebra R_1 is not supported");
  if (m < 3 || m % 2 == 0 || m > kMaxAlgebraDim)
    throw DimensionError("algebra dimension m must be an odd integer in [3, " + std::to_string(kMaxAlgebraDim) +
                         "], got " + std::to_string(m));
}

}  // namespace slicewb
