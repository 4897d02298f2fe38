#pragma once

// L^2 distance between 1 and the smoothed Farey-point indicator
//
//   chi(alpha) = (N/L) sum_{q in QSet} sum_{(a,q)=1} phi(N (alpha - a/q)),
//
// computed through the Plancherel expansion: the zero mode of 1 - chi
// vanishes exactly (phi has unit integral), and
//
//   int_0^1 |1 - chi|^2 = (1/L^2) sum_{l != 0} |phihat(l/N)|^2 S(l)^2,
//   S(l) = sum_{q in QSet} c_q(l),   c_q(l) = sum_{d | (q,l)} mu(q/d) d.
//
// The sum is truncated at |l| <= max_ell; the dropped tail is bounded with
// |phihat(xi)| <= ||phi''||_1 / (2 pi xi)^2 and |S(l)| <= sum_q sigma(q),
// and must stay under 10% of the retained head (the returned lhs is the
// head; the tail bound is reported, not added).

#include "rootgap/arcmeasure.hpp"
#include "rootgap/intmath.hpp"

namespace rootgap {

struct JutilaL2 {
  double lhs = 0.0;         // Plancherel head over 0 < |l| <= max_ell
  double bound = 0.0;       // Q^4 / (Delta^2 L^2) + Q^{2.1} / L^2
  double tail_bound = 0.0;  // analytic bound on the dropped |l| > max_ell tail
  u64 max_ell = 0;
};

// Requires n equal to the QSet's N and max_ell >= n. Throws
// TruncationTooCoarse when the tail bound exceeds 10% of the head.
JutilaL2 jutila_l2(const MinorArcMeasure& mu, u64 n, u64 max_ell);

}  // namespace rootgap
