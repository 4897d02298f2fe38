#pragma once

// Quadratic Gauss sums: direct summation G(a,b;c) = sum_{x mod c}
// e((a x^2 + b x)/c), the closed form for modulus 4v with quadratic
// coefficient 1, and the vanishing-criterion sweep used by the acceptance
// suite.
//
// Closed form: for v >= 1,
//   G(1, u; 4v) = sqrt(2) * sqrt(4v) * e(1/8) * e(-(u/2)^2 / (4v))   (u even)
//               = 0                                                  (u odd).

#include <complex>
#include <cstdint>

#include "rootgap/intmath.hpp"

namespace rootgap {

// Direct evaluation; throws BruteForceLimit for c > 10^6, UsageError for c=0.
std::complex<double> gauss_sum_direct(i64 a, i64 b, u64 c);

std::complex<double> gauss_sum_closed(i64 u, u64 v);  // v >= 1 (UsageError)

// Sweep of the vanishing criterion: over all moduli c in [2, c_max] and all
// (a, b) mod c with d = gcd(a, c) > 1 and d not dividing b, the sum must
// vanish; returns the maximum |G(a,b;c)| / c encountered (should be ~1e-15).
// Only rows where the criterion predicts zero are accumulated.
struct VanishingSweep {
  double max_ratio;       // max |G| / c over predicted-zero rows
  u64 worst_c, worst_a, worst_b;
  u64 rows_checked;
};
VanishingSweep gauss_vanishing_sweep(u64 c_max);

// Closed-form vs direct sweep over v <= v_max, |u| <= u_max; returns the
// maximum |closed - direct| / sqrt(4v).
struct ClosedFormSweep {
  double max_ratio;
  u64 worst_v;
  i64 worst_u;
  u64 rows_checked;
};
ClosedFormSweep gauss_closed_sweep(u64 v_max, u64 u_max);

}  // namespace rootgap
