#pragma once

// 96-bit fixed-point fractional parts. A Frac96 stores a value in [0, 1) as
// raw / 2^96. All mod-1 arithmetic here is exact; frac_sqrt carries enough
// precision (error well below 2^-80) that comparisons between distinct
// sqrt(n) mod 1 values for n up to 1e8 are unambiguous.

#include <cstdint>
#include <string>

namespace rootgap {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Frac96 {
  u128 raw = 0;  // value = raw / 2^96, invariant raw < 2^96

  friend bool operator<(Frac96 a, Frac96 b) { return a.raw < b.raw; }
  friend bool operator==(Frac96 a, Frac96 b) { return a.raw == b.raw; }
  friend bool operator!=(Frac96 a, Frac96 b) { return a.raw != b.raw; }
  friend bool operator<=(Frac96 a, Frac96 b) { return a.raw <= b.raw; }
};

inline constexpr int kFrac96Bits = 96;
inline constexpr u128 frac96_one() { return u128(1) << kFrac96Bits; }

u64 isqrt_u64(u64 n);

// Fractional part of sqrt(n); exact 0 for perfect squares. Requires n < 2^62
// (UsageError otherwise) so intermediate products fit in 128 bits.
Frac96 frac_sqrt(u64 n);

double frac96_to_double(Frac96 f);
Frac96 frac96_from_double(double x);  // x is reduced mod 1 first

// floor(num * 2^96 / den) for 0 <= num < den; exact.
Frac96 frac96_from_rational(u64 num, u64 den);

Frac96 frac96_add_mod1(Frac96 a, Frac96 b);
Frac96 frac96_sub_mod1(Frac96 a, Frac96 b);

// Decimal expansion "0.d1d2..." with the requested number of digits (exact
// truncation, no rounding).
std::string frac96_to_decimal(Frac96 f, int digits);

}  // namespace rootgap
