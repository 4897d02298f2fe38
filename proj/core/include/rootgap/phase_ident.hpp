#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootgap/intmath.hpp"
#include "rootgap/rng.hpp"

namespace rootgap {

using Rational = boost::multiprecision::cpp_rational;

// Exact check of the phase-reduction identity
//
//   sum_i qbar_i^2 u_i^2 / (4 v_i)
//     == -u1 * inv(4 v1, q^2) * sum_i u_i / q^2
//        + u1 * inv(4 v1^2, q) * sum_i l_i / q
//        + sum_i u_i^2 / (4 v_i q^2)        (mod 1),
//
// where qbar_i inverts q modulo |4 v_i| and l_i = (u1 v_i - u_i v1)/q.
// Requires q odd, 3 <= q < 2^31, equally sized nonempty u and v, and for
// every i: v_i != 0 and gcd(4 u_i v_i, q) = 1 with q | u1 v_i - u_i v1
// (violations throw HypothesisFailed naming the 1-based index). Both sides
// are evaluated in exact rational arithmetic; the returned residue is their
// difference reduced into [0,1) and must be exactly 0 when the identity
// holds.
Rational phase_reduction_check(i64 q, const std::vector<i64>& u,
                               const std::vector<i64>& v);

// Randomly generated admissible input for phase_reduction_check: odd
// q in [3, q_max], k terms with small u_i and v_i of both signs satisfying
// the congruence and coprimality hypotheses by construction.
struct PhaseTuple {
  i64 q = 3;
  std::vector<i64> u;
  std::vector<i64> v;
};

PhaseTuple random_phase_tuple(Rng& rng, int k, i64 q_max);

}  // namespace rootgap
