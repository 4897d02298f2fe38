#include "rootgap/fixedpoint.hpp"

#include <cmath>

#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

// floor(num * 2^96 / den) by 96-step restoring division.
// Requires num < den and den < 2^127 so the running shift cannot overflow.
u128 div_shift96(u128 num, u128 den) {
  u128 q = 0;
  for (int i = 0; i < kFrac96Bits; ++i) {
    num <<= 1;
    q <<= 1;
    if (num >= den) {
      num -= den;
      q |= 1;
    }
  }
  return q;
}

// (f * f) >> 97 for f < 2^96, exact up to 2 units in the last place
// (sub-shift carries between the three partial products are dropped).
u128 square_shift97(u128 f) {
  u128 f1 = f >> 64;
  u128 f0 = f & 0xffffffffffffffffull;
  u128 hi = f1 * f1;        // < 2^64
  u128 mid = f1 * f0;       // < 2^96
  u128 lo = f0 * f0;        // < 2^128
  return (hi << 31) + (mid >> 32) + (lo >> 97);
}

}  // namespace

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 x = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  if (x > 0 && x > n / x) --x;
  while (x > 0 && x > n / x) --x;
  while (x + 1 <= n / (x + 1)) ++x;
  return x;
}

Frac96 frac_sqrt(u64 n) {
  if (n >= (1ull << 62)) throw UsageError("frac_sqrt: n must be < 2^62");
  u64 m = isqrt_u64(n);
  u64 d = n - m * m;  // 0 <= d <= 2m
  if (d == 0) return Frac96{0};

  long double seed = std::sqrt(static_cast<long double>(n)) -
                     static_cast<long double>(m);
  if (seed < 0.0L) seed = 0.0L;
  u128 f = static_cast<u128>(seed * 0x1p96L);
  if (f >= frac96_one()) f = frac96_one() - 1;

  // Newton on g(f) = (m+f)^2 - n: f <- ((f^2 + d) / 2) / (m + f), carried out
  // in Q96 with both operands pre-halved so numerator and denominator fit in
  // 128 bits. Two iterations from the long-double seed give error below a few
  // units of 2^-96.
  for (int it = 0; it < 2; ++it) {
    u128 num = square_shift97(f) + (u128(d) << 95);
    u128 den = (u128(m) << kFrac96Bits) + f;
    if (num >= den) {
      f = frac96_one() - 1;  // root is 1 - O(1/m); next iteration refines
      continue;
    }
    f = div_shift96(num, den);
  }
  return Frac96{f};
}

double frac96_to_double(Frac96 f) {
  return static_cast<double>(f.raw) / 0x1p96;
}

Frac96 frac96_from_double(double x) {
  double fx = x - std::floor(x);
  if (!(fx >= 0.0) || fx >= 1.0) fx = 0.0;
  u128 raw = static_cast<u128>(static_cast<long double>(fx) * 0x1p96L);
  if (raw >= frac96_one()) raw = frac96_one() - 1;
  return Frac96{raw};
}

Frac96 frac96_from_rational(u64 num, u64 den) {
  if (den == 0 || num >= den) {
    throw UsageError("frac96_from_rational: need 0 <= num < den");
  }
  return Frac96{div_shift96(num, den)};
}

Frac96 frac96_add_mod1(Frac96 a, Frac96 b) {
  u128 s = a.raw + b.raw;
  if (s >= frac96_one()) s -= frac96_one();
  return Frac96{s};
}

Frac96 frac96_sub_mod1(Frac96 a, Frac96 b) {
  return Frac96{a.raw >= b.raw ? a.raw - b.raw
                               : a.raw + frac96_one() - b.raw};
}

std::string frac96_to_decimal(Frac96 f, int digits) {
  std::string out = "0.";
  u128 raw = f.raw;
  const u128 mask = frac96_one() - 1;
  for (int i = 0; i < digits; ++i) {
    raw *= 10;
    out.push_back(static_cast<char>('0' + static_cast<int>(raw >> kFrac96Bits)));
    raw &= mask;
  }
  return out;
}

}  // namespace rootgap
