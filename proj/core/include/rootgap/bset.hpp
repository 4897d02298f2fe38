#pragma once

#include <vector>

#include "rootgap/intmath.hpp"

namespace rootgap {

// A rational point a/q, gcd(a,q) = 1, 1 <= a <= q.
struct FareyPoint {
  u64 a = 1;
  u64 q = 1;
};

// Frequency pair (u, v): u nonzero with |u| <= delta^4, v nonzero coprime to
// q, and u == 2*v*a (mod q).
struct LatticePair {
  i64 u = 0;
  i64 v = 0;
};

inline bool operator==(const LatticePair& x, const LatticePair& y) {
  return x.u == y.u && x.v == y.v;
}

// All pairs with |v| <= v_cap, in deterministic order (v ascending from
// -v_cap to v_cap skipping 0, u ascending within each v). Pairs whose v
// shares a factor with q are excluded. The empty list is a valid result.
std::vector<LatticePair> enumerate_bset(const FareyPoint& fp, double delta,
                                        i64 v_cap);

}  // namespace rootgap
