#include "rootgap/bset.hpp"

#include <cmath>
#include <numeric>

#include "rootgap/errors.hpp"

namespace rootgap {

std::vector<LatticePair> enumerate_bset(const FareyPoint& fp, double delta,
                                        i64 v_cap) {
  if (fp.q == 0 || fp.a == 0 || fp.a > fp.q ||
      std::gcd(fp.a, fp.q) != 1) {
    throw UsageError("enumerate_bset: invalid Farey point");
  }
  if (!(delta > 0.0)) throw UsageError("enumerate_bset: delta must be positive");
  if (v_cap < 1) throw UsageError("enumerate_bset: v_cap must be at least 1");

  const double d4 = delta * delta * delta * delta;
  const i64 u_bound = static_cast<i64>(std::floor(d4));
  std::vector<LatticePair> pairs;
  if (u_bound < 1) return pairs;

  const i64 q = static_cast<i64>(fp.q);
  for (i64 v = -v_cap; v <= v_cap; ++v) {
    if (v == 0) continue;
    if (std::gcd(std::abs(v), q) != 1) continue;
    // Base residue of 2*v*a mod q in [0, q).
    i64 r = static_cast<i64>(
        static_cast<u64>(((i128(2) * v * static_cast<i64>(fp.a)) % q + q) % q));
    // Representatives r + k*q inside [-u_bound, u_bound], u = 0 excluded.
    const i64 k_lo = static_cast<i64>(
        std::ceil(static_cast<double>(-u_bound - r) / static_cast<double>(q)));
    const i64 k_hi = static_cast<i64>(
        std::floor(static_cast<double>(u_bound - r) / static_cast<double>(q)));
    for (i64 k = k_lo; k <= k_hi; ++k) {
      const i64 u = r + k * q;
      if (u == 0 || u < -u_bound || u > u_bound) continue;
      pairs.push_back({u, v});
    }
  }
  return pairs;
}

}  // namespace rootgap
