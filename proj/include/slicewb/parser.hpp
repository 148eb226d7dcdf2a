#pragma once
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "slicewb/slice_function.hpp"

namespace slicewb {

/// Expression tree. Products keep their written order; powers carry a
/// nonnegative integer exponent.
struct Expr {
  enum class Kind { variable, blade, rational, sum, difference, product, power, negate, divide };
  Kind kind;
  int index = 0;        // variable
  Blade blade = 0;      // blade constant
  Rational value;       // rational literal or divisor
  int exponent = 0;     // power
  std::vector<std::unique_ptr<Expr>> children;
  std::size_t position = 0;
};

/// Grammar (whitespace ignored):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*')? unary | '/' number)*
///   unary  := '-' unary | factor
///   factor := atom ('^' integer)?
///   atom   := number | 'x' index | blade | '(' expr ')'
/// Blades use the I/O syntax "e1", "e13", "e{1,13}". Throws ParseError.
std::unique_ptr<Expr> parse_expression(std::string_view text, int m, int n);

/// Juxtaposed and '*' products lower to stem_tensor in written order.
SliceFunction lower(const Expr& e, int m, int n);

inline SliceFunction parse_slice_function(std::string_view text, int m, int n) {
  return lower(*parse_expression(text, m, n), m, n);
}

}  // namespace slicewb
