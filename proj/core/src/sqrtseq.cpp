#include "rootgap/sqrtseq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rootgap/errors.hpp"
#include "rootgap/parallel.hpp"

namespace rootgap {

FracSequence build_sequence(u64 n) {
  if (n < 100 || n > 100000000) {
    throw UsageError("build_sequence: n must lie in [100, 1e8]");
  }
  FracSequence seq;
  seq.n_base = n;
  seq.entries.resize(n);
  auto* entries = seq.entries.data();
  parallel_for_ranges(n, 4096, [entries, n](u64 lo, u64 hi) {
    for (u64 i = lo; i < hi; ++i) {
      entries[i].value = frac_sqrt(n + i);
      entries[i].off = static_cast<u32>(i);
    }
  });
  std::sort(seq.entries.begin(), seq.entries.end(),
            [](const SeqEntry& x, const SeqEntry& y) {
              return x.value.raw != y.value.raw ? x.value.raw < y.value.raw
                                                : x.off < y.off;
            });
  return seq;
}

namespace {

// Index of the first entry with value >= x.
std::size_t lower_index(const FracSequence& seq, Frac96 x) {
  const auto it = std::lower_bound(
      seq.entries.begin(), seq.entries.end(), x,
      [](const SeqEntry& e, Frac96 b) { return e.value.raw < b.raw; });
  return static_cast<std::size_t>(it - seq.entries.begin());
}

}  // namespace

u64 count_in_window(const FracSequence& seq, double x, double s) {
  if (!(x >= 0.0) || x >= 1.0) {
    throw UsageError("count_in_window: x must lie in [0,1)");
  }
  if (!(s > 0.0)) throw UsageError("count_in_window: s must be positive");
  const double width = s / static_cast<double>(seq.n_base);
  if (width >= 1.0) return seq.entries.size();

  const Frac96 lo = frac96_from_double(x);
  const double hi_d = x + width;
  if (hi_d < 1.0) {
    return lower_index(seq, frac96_from_double(hi_d)) - lower_index(seq, lo);
  }
  // Wrapping window: [x, 1) plus [0, x + width - 1).
  return (seq.entries.size() - lower_index(seq, lo)) +
         lower_index(seq, frac96_from_double(hi_d - 1.0));
}

std::vector<double> circular_gaps(const FracSequence& seq) {
  const std::size_t n = seq.entries.size();
  std::vector<double> gaps(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    gaps[i] = frac96_to_double(
        frac96_sub_mod1(seq.entries[i + 1].value, seq.entries[i].value));
  }
  gaps[n - 1] = frac96_to_double(
      frac96_sub_mod1(seq.entries[0].value, seq.entries[n - 1].value));
  return gaps;
}

double void_statistic(const FracSequence& seq, double s) {
  if (!(s > 0.0)) throw UsageError("void_statistic: s must be positive");
  const double width = s / static_cast<double>(seq.n_base);
  double total = 0.0;
  for (double g : circular_gaps(seq)) {
    if (g > width) total += g - width;
  }
  return total;
}

std::pair<double, double> void_gap_functional(const FracSequence& seq, double L) {
  if (!(L > 0.0)) throw UsageError("void_gap_functional: L must be positive");
  const double nd = static_cast<double>(seq.n_base);
  double overshoot = 0.0;
  for (double g : circular_gaps(seq)) {
    const double t = nd * g - L;
    if (t > 0.0) overshoot += t;
  }
  return {void_statistic(seq, L), overshoot / nd};
}

GapReport gap_report(const FracSequence& seq, u64 bins, double bin_max) {
  if (bins < 10) throw UsageError("gap_report: need at least 10 bins");
  if (!(bin_max > 0.0)) throw UsageError("gap_report: bin_max must be positive");

  GapReport rep;
  rep.n = seq.entries.size();
  rep.gaps = circular_gaps(seq);

  const double nd = static_cast<double>(rep.n);
  const double width = bin_max / static_cast<double>(bins);
  std::vector<u64> counts(bins + 1, 0);
  double sum = 0.0, mn = 0.0, mx = 0.0;
  bool first = true;
  for (double g : rep.gaps) {
    const double t = nd * g;
    sum += t;
    if (first || t < mn) mn = t;
    if (first || t > mx) mx = t;
    first = false;
    const u64 idx = t >= bin_max
                        ? bins
                        : std::min<u64>(static_cast<u64>(t / width), bins - 1);
    ++counts[idx];
  }
  rep.mean_scaled = sum / nd;
  rep.min_scaled = mn;
  rep.max_scaled = mx;

  rep.bins.resize(bins + 1);
  for (u64 i = 0; i < bins; ++i) {
    GapBin& b = rep.bins[i];
    b.lo = static_cast<double>(i) * width;
    b.hi = static_cast<double>(i + 1) * width;
    b.count = counts[i];
    b.density = static_cast<double>(counts[i]) / (nd * width);
    b.exp_density = std::exp(-(b.lo + 0.5 * width));
    const double dev = std::abs(b.density - b.exp_density);
    if (dev > rep.sup_dev_exp) rep.sup_dev_exp = dev;
  }
  GapBin& over = rep.bins[bins];
  over.lo = bin_max;
  over.hi = std::numeric_limits<double>::infinity();
  over.count = counts[bins];
  over.density = static_cast<double>(counts[bins]) / nd;
  over.exp_density = std::exp(-bin_max);
  return rep;
}

std::string gap_report_to_csv(const GapReport& report) {
  std::string out = "bin_lo,bin_hi,count,density,exp_density\n";
  char buf[160];
  for (const GapBin& b : report.bins) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%llu,%.17g,%.17g\n", b.lo, b.hi,
                  static_cast<unsigned long long>(b.count), b.density,
                  b.exp_density);
    out += buf;
  }
  return out;
}

}  // namespace rootgap
