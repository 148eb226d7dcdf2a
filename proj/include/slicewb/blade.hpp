#pragma once
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace slicewb {

/// Basis blade e_A of R_m, A a subset of {1..m}: bit (i-1) set iff i in A.
/// The empty mask is the scalar unit.
using Blade = std::uint32_t;

inline constexpr int kMaxAlgebraDim = 16;

constexpr Blade generator(int i) { return Blade{1} << (i - 1); }

constexpr int grade(Blade b) { return std::popcount(b); }

/// Sign of e_A * e_B = sign * e_{A xor B} for e_i^2 = -1.
/// Counts transpositions needed to sort the concatenated index list, then
/// adds one factor of -1 for every repeated generator.
constexpr int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

/// Reversion-with-sign used by Clifford conjugation: (-1)^{k(k+1)/2}.
constexpr int conjugation_sign(Blade b) {
  int k = grade(b);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

/// "1", "e1", "e13"; for m > 9 the braced form "e{1,13}".
std::string blade_to_string(Blade b, int m);

/// Inverse of blade_to_string. Throws std::invalid_argument on malformed
/// text or an index outside 1..m.
Blade parse_blade(std::string_view text, int m);

/// Throws DegenerateDimension for m == 1 and DimensionError for any other
/// value that is not an odd integer in [3, kMaxAlgebraDim].
void check_algebra_dim(int m);

}  // namespace slicewb
