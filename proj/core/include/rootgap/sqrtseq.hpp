#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootgap/fixedpoint.hpp"
#include "rootgap/intmath.hpp"

namespace rootgap {

// One sequence element: the fractional part of sqrt(n) for n = n_base + off.
struct SeqEntry {
  Frac96 value;
  u32 off = 0;
};

// Fractional parts of sqrt(n) for n_base <= n < 2*n_base, sorted ascending
// (ties broken by n ascending). Perfect squares contribute exactly 0.
struct FracSequence {
  u64 n_base = 0;
  std::vector<SeqEntry> entries;
};

// Requires 100 <= n <= 10^8 (memory scales as 32 bytes per element).
FracSequence build_sequence(u64 n);

// Number of sequence values in [x, x + s/n) with the window wrapping mod 1.
// Requires 0 <= x < 1 and s > 0.
u64 count_in_window(const FracSequence& seq, double x, double s);

// Circular gaps (successor minus value; the final gap wraps past 1). The
// gaps sum to exactly 1 up to double rounding.
std::vector<double> circular_gaps(const FracSequence& seq);

// Measure of x in [0,1) whose window [x, x + s/n) contains no sequence
// value, via the exact identity: sum over circular gaps g of max(g - s/n, 0).
double void_statistic(const FracSequence& seq, double s);

// Both routes to the same quantity, computed with independent rounding
// paths: (void_statistic(seq, L), (1/n) * sum over gaps of max(n*g - L, 0)).
// The two components agree to 1e-12; this is the exact finite-n identity
// behind the gap/void correspondence.
std::pair<double, double> void_gap_functional(const FracSequence& seq, double L);

// Histogram row of the scaled-gap distribution. The final row is the
// overflow bin [bin_max, inf); its density column holds the mass fraction
// count/n and its exp_density column the exponential tail mass e^{-bin_max}.
struct GapBin {
  double lo = 0.0;
  double hi = 0.0;
  u64 count = 0;
  double density = 0.0;      // count / (n * width); mass fraction on overflow
  double exp_density = 0.0;  // e^{-midpoint}; tail mass on overflow
};

struct GapReport {
  u64 n = 0;
  std::vector<double> gaps;  // circular gaps, sum exactly 1
  std::vector<GapBin> bins;  // left-closed bins of n*gap; overflow last
  double mean_scaled = 0.0;  // mean of n*gap (equals 1 by construction)
  double min_scaled = 0.0;
  double max_scaled = 0.0;
  double sup_dev_exp = 0.0;  // sup over regular bins of |density - e^{-mid}|
};

// Requires bins >= 10 and bin_max > 0.
GapReport gap_report(const FracSequence& seq, u64 bins, double bin_max);

// CSV with header bin_lo,bin_hi,count,density,exp_density.
std::string gap_report_to_csv(const GapReport& report);

}  // namespace rootgap
