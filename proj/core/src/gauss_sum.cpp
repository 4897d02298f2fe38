#include "rootgap/gauss_sum.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "rootgap/constants.hpp"
#include "rootgap/errors.hpp"
#include "rootgap/fourier.hpp"

namespace rootgap {

namespace {

constexpr u64 kDirectCap = 1000000;

u64 reduce_mod(i64 x, u64 c) {
  i64 r = x % static_cast<i64>(c);
  if (r < 0) r += static_cast<i64>(c);
  return static_cast<u64>(r);
}

// e(r/c) lookup table for one modulus.
struct OmegaTable {
  std::vector<double> re, im;
  explicit OmegaTable(u64 c) : re(c), im(c) {
    for (u64 r = 0; r < c; ++r) {
      const double t = kTwoPi * static_cast<double>(r) / static_cast<double>(c);
      re[r] = std::cos(t);
      im[r] = std::sin(t);
    }
  }
};

}  // namespace

std::complex<double> gauss_sum_direct(i64 a, i64 b, u64 c) {
  if (c == 0) throw UsageError("gauss_sum_direct: modulus must be positive");
  if (c > kDirectCap) throw BruteForceLimit(c);
  const u64 ar = reduce_mod(a, c), br = reduce_mod(b, c);
  double re = 0.0, im = 0.0;
  for (u64 x = 0; x < c; ++x) {
    // a x^2 + b x mod c; operands < 1e6 so the products fit in u128 easily.
    const u64 r = static_cast<u64>((u128(ar) * x % c * x + u128(br) * x) % c);
    const double t = kTwoPi * static_cast<double>(r) / static_cast<double>(c);
    re += std::cos(t);
    im += std::sin(t);
  }
  return {re, im};
}

std::complex<double> gauss_sum_closed(i64 u, u64 v) {
  if (v == 0) throw UsageError("gauss_sum_closed: v must be positive");
  if (u % 2 != 0) return {0.0, 0.0};
  const u64 m = 4 * v;
  const u64 h = reduce_mod(u / 2, m);
  const u64 hsq = static_cast<u64>(u128(h) * h % m);
  const double mag = std::sqrt(2.0) * std::sqrt(static_cast<double>(m));
  const double phase =
      0.125 - static_cast<double>(hsq) / static_cast<double>(m);
  const std::complex<double> ph = expi2pi(phase);
  return mag * ph;
}

VanishingSweep gauss_vanishing_sweep(u64 c_max) {
  if (c_max > kDirectCap) throw BruteForceLimit(c_max);
  VanishingSweep out{0.0, 0, 0, 0, 0};
  std::vector<u32> px;
  for (u64 c = 2; c <= c_max; ++c) {
    const OmegaTable omega(c);
    for (u64 a = 1; a < c; ++a) {
      const u64 d = std::gcd(a, c);
      if (d == 1) continue;  // every b has d | b trivially; nothing to check
      // px[x] = (a x^2 + b x) mod c, advanced incrementally in b.
      px.resize(c);
      for (u64 x = 0; x < c; ++x) {
        px[x] = static_cast<u32>(u128(a) * x % c * x % c);
      }
      for (u64 b = 0; b < c; ++b) {
        if (b % d != 0) {
          double re = 0.0, im = 0.0;
          for (u64 x = 0; x < c; ++x) {
            re += omega.re[px[x]];
            im += omega.im[px[x]];
          }
          const double ratio =
              std::sqrt(re * re + im * im) / static_cast<double>(c);
          if (ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.worst_c = c;
            out.worst_a = a;
            out.worst_b = b;
          }
          ++out.rows_checked;
        }
        // Advance to b+1: each slot gains x mod c.
        const u32 cc = static_cast<u32>(c);
        for (u32 x = 0; x < cc; ++x) {
          u32 p = px[x] + x;
          if (p >= cc) p -= cc;
          px[x] = p;
        }
      }
    }
  }
  return out;
}

ClosedFormSweep gauss_closed_sweep(u64 v_max, u64 u_max) {
  ClosedFormSweep out{0.0, 0, 0, 0};
  std::vector<u32> px;
  for (u64 v = 1; v <= v_max; ++v) {
    const u64 m = 4 * v;
    const OmegaTable omega(m);
    const double scale = std::sqrt(static_cast<double>(m));
    // px[x] = (x^2 + u x) mod m starting at u = -u_max, stepped by 1 in u.
    px.resize(m);
    const u64 u0 = reduce_mod(-static_cast<i64>(u_max), m);
    for (u64 x = 0; x < m; ++x) {
      px[x] = static_cast<u32>((u128(x) * x + u128(u0) * x) % m);
    }
    for (i64 u = -static_cast<i64>(u_max); u <= static_cast<i64>(u_max); ++u) {
      double re = 0.0, im = 0.0;
      for (u64 x = 0; x < m; ++x) {
        re += omega.re[px[x]];
        im += omega.im[px[x]];
      }
      const std::complex<double> closed = gauss_sum_closed(u, v);
      const double dev = std::abs(closed - std::complex<double>(re, im));
      if (dev / scale > out.max_ratio) {
        out.max_ratio = dev / scale;
        out.worst_v = v;
        out.worst_u = u;
      }
      ++out.rows_checked;
      const u32 mm = static_cast<u32>(m);
      for (u32 x = 0; x < mm; ++x) {
        u32 p = px[x] + x;
        if (p >= mm) p -= mm;
        px[x] = p;
      }
    }
  }
  return out;
}

}  // namespace rootgap
