#pragma once

#include <string>
#include <vector>

#include "rootgap/intmath.hpp"

namespace rootgap {

// Modulus families q = a_factor * b_factor in [Q, 2Q], Q = delta * sqrt(n).
//
// kPaper keeps the original constraint set (a_factor in [Q^(1/1000),
// 2Q^(1/1000)], every prime factor of q above delta^2001, q squarefree),
// which is infeasible at any numerically reachable scale and exists so the
// constraint logic itself is testable. kDeskPrimePair replaces it with
// q = a*b for distinct primes a, b above a configurable floor, a in a fixed
// band; this keeps squarefreeness, the coprime bilinear split, and the
// automatic coprimality of small v to q.
enum class QSetMode { kPaper, kDeskPrimePair };

struct QMember {
  u64 q;
  u64 a_factor;
  u64 b_factor;
};

struct QSet {
  double delta = 0.0;
  u64 n = 0;
  double q_scale = 0.0;  // Q = delta * sqrt(n); members lie in [Q, 2Q]
  QSetMode mode = QSetMode::kDeskPrimePair;
  u64 prime_floor = 0;
  double a_band_lo = 0.0;
  double a_band_hi = 0.0;
  std::vector<QMember> members;  // sorted ascending by q, unique q
};

inline constexpr double kDefaultABandLo = 11.0;
inline constexpr double kDefaultABandHi = 13.0;
inline constexpr u64 kDefaultPrimeFloor = 7;

// Enumerates the modulus family. Throws UsageError on parameter violations
// (n < 100, desk prime_floor < 3, non-positive delta, inverted band) and
// EmptyQSet when no modulus satisfies the constraints.
QSet build_qset(double delta, u64 n, QSetMode mode,
                u64 prime_floor = kDefaultPrimeFloor,
                double a_band_lo = kDefaultABandLo,
                double a_band_hi = kDefaultABandHi);

// Totient mass diagnostics for a modulus family. Compares the phi(q)/q mass
// in the window q <= (1+epsilon)Q against epsilon times the full mass, and
// the totient total L = sum phi(q) against (3/2) Q sum phi(q)/q.
struct PhiStats {
  double window_sum = 0.0;       // sum of phi(q)/q over members with q <= (1+eps)Q
  double scaled_full_sum = 0.0;  // eps * sum phi(q)/q over all members
  double phi_total = 0.0;        // L = sum phi(q)
  double lemma_estimate = 0.0;   // (3/2) * Q * sum phi(q)/q
  double dev_window = 0.0;       // relative deviation of the first pair
  double dev_total = 0.0;        // relative deviation of the second pair
};

// Requires a nonempty set and epsilon in (0, 1].
PhiStats qset_phi_stats(const QSet& qs, double epsilon);

// {"delta":..., "n":..., "mode":..., "prime_floor":..., "members":[[q,a,b],...]}
std::string qset_to_json(const QSet& qs);

const char* qset_mode_name(QSetMode mode);

}  // namespace rootgap
