#include "rootgap/sqrtseq.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "rootgap/errors.hpp"
#include "rootgap/rng.hpp"

using namespace rootgap;

namespace {

using boost::multiprecision::cpp_int;

// 256-bit reference for the fixed-point fractional part of sqrt(n).
u128 oracle_frac_raw(u64 n) {
  const cpp_int big = sqrt(cpp_int(n) << 192);
  const cpp_int frac = big & ((cpp_int(1) << 96) - 1);
  return static_cast<u128>(frac);
}

u64 raw_distance(u128 a, u128 b) {
  const u128 d = a > b ? a - b : b - a;
  return static_cast<u64>(d);
}

}  // namespace

TEST_CASE("build_sequence basics and square ties") {
  const FracSequence seq = build_sequence(100);
  REQUIRE(seq.entries.size() == 100);
  // Squares 100, 121, 144, 169, 196 all have fractional part exactly 0 and
  // appear first, ordered by n.
  const std::vector<u32> square_offs = {0, 21, 44, 69, 96};
  for (std::size_t i = 0; i < square_offs.size(); ++i) {
    CHECK(seq.entries[i].value.raw == 0);
    CHECK(seq.entries[i].off == square_offs[i]);
  }
  CHECK(seq.entries[5].value.raw != 0);
  for (const SeqEntry& e : seq.entries) {
    CHECK(e.value.raw < frac96_one());
    CHECK(e.off < 100);
  }
}

TEST_CASE("build_sequence matches a 256-bit sorted oracle at n = 1000") {
  const FracSequence seq = build_sequence(1000);
  std::vector<std::pair<u128, u64>> oracle;
  oracle.reserve(1000);
  for (u64 n = 1000; n < 2000; ++n) oracle.emplace_back(oracle_frac_raw(n), n);
  std::sort(oracle.begin(), oracle.end());
  REQUIRE(oracle.size() == seq.entries.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(seq.n_base + seq.entries[i].off == oracle[i].second);
    CHECK(raw_distance(seq.entries[i].value.raw, oracle[i].first) <= 4);
  }
}

TEST_CASE("build_sequence validates the range") {
  CHECK_THROWS_AS(build_sequence(99), UsageError);
  CHECK_THROWS_AS(build_sequence(100000001), UsageError);
}

TEST_CASE("count_in_window edge behavior") {
  const FracSequence seq = build_sequence(1000);
  // Window of full measure captures everything.
  CHECK(count_in_window(seq, 0.25, 1000.0) == 1000);
  CHECK(count_in_window(seq, 0.0, 2000.0) == 1000);

  // x just above the largest value, window stopping short of the wrap.
  const double top = frac96_to_double(seq.entries.back().value);
  const double x = top + 0.25 * (1.0 - top);
  const double s = 0.25 * (1.0 - top) * 1000.0;
  CHECK(count_in_window(seq, x, s) == 0);
}

TEST_CASE("count_in_window matches an exact distance scan on random windows") {
  const FracSequence seq = build_sequence(1000);
  Rng rng(0xc0137u);
  for (int trial = 0; trial < 60; ++trial) {
    const double x = rng.next_double();
    const double s = 0.01 + 3000.0 * rng.next_double();  // widths up to ~3
    const double width = s / 1000.0;
    u64 expect = 0;
    if (width >= 1.0) {
      expect = seq.entries.size();
    } else {
      // Membership via the wrapped distance (value - x) mod 1 < width,
      // a different route than the binary search over [x, x + width).
      const Frac96 xq = frac96_from_double(x);
      const u128 wraw = frac96_from_double(width).raw;
      for (const SeqEntry& e : seq.entries) {
        if (frac96_sub_mod1(e.value, xq).raw < wraw) ++expect;
      }
    }
    CHECK(count_in_window(seq, x, s) == expect);
  }
}

TEST_CASE("count_in_window over a dyadic partition sums to n") {
  const FracSequence seq = build_sequence(1000);
  u64 total = 0;
  for (int i = 0; i < 8; ++i) {
    total += count_in_window(seq, static_cast<double>(i) / 8.0, 125.0);
  }
  CHECK(total == 1000);
}

TEST_CASE("circular gaps sum to one") {
  const FracSequence seq = build_sequence(1234);
  const std::vector<double> gaps = circular_gaps(seq);
  REQUIRE(gaps.size() == 1234);
  double sum = 0.0;
  for (double g : gaps) {
    CHECK(g >= 0.0);
    sum += g;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("void_statistic limiting values and monotonicity") {
  const FracSequence seq = build_sequence(1000);
  CHECK(void_statistic(seq, 1e-9) == doctest::Approx(1.0).epsilon(1e-9));

  const std::vector<double> gaps = circular_gaps(seq);
  const double max_gap = *std::max_element(gaps.begin(), gaps.end());
  CHECK(void_statistic(seq, 1000.0 * max_gap * 1.0001) == 0.0);

  double prev = 2.0;
  for (double s : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0}) {
    const double v = void_statistic(seq, s);
    CHECK(v <= prev);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("void_statistic agrees with a Monte Carlo window probe") {
  const FracSequence seq = build_sequence(1000);
  const double v = void_statistic(seq, 1.0);
  Rng rng(0x4e17au);
  const int samples = 1000000;
  int empty = 0;
  for (int i = 0; i < samples; ++i) {
    if (count_in_window(seq, rng.next_double(), 1.0) == 0) ++empty;
  }
  const double p = static_cast<double>(empty) / samples;
  const double stderr3 = 3.0 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / samples);
  CHECK(std::abs(v - p) <= stderr3);
}

TEST_CASE("void_gap_functional components agree to 1e-12") {
  const FracSequence seq = build_sequence(1000);
  for (double L : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto [a, b] = void_gap_functional(seq, L);
    CHECK(std::abs(a - b) <= 1e-12);
  }
  // L beyond the largest scaled gap: both components vanish.
  const std::vector<double> gaps = circular_gaps(seq);
  const double max_scaled = 1000.0 * *std::max_element(gaps.begin(), gaps.end());
  const auto [za, zb] = void_gap_functional(seq, max_scaled * 1.001);
  CHECK(za == 0.0);
  CHECK(zb == 0.0);
  // Tiny L: both near 1.
  const auto [oa, ob] = void_gap_functional(seq, 1e-9);
  CHECK(oa == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ob == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gap_report histogram mechanics") {
  const FracSequence seq = build_sequence(10000);
  const GapReport rep = gap_report(seq, 40, 2.0);
  REQUIRE(rep.bins.size() == 41);
  CHECK(rep.n == 10000);
  CHECK(rep.mean_scaled == doctest::Approx(1.0).epsilon(1e-12));

  u64 total = 0;
  const double width = 2.0 / 40.0;
  for (std::size_t i = 0; i < 40; ++i) {
    const GapBin& b = rep.bins[i];
    CHECK(b.lo == doctest::Approx(static_cast<double>(i) * width));
    CHECK(b.hi == doctest::Approx(static_cast<double>(i + 1) * width));
    CHECK(b.density ==
          doctest::Approx(static_cast<double>(b.count) / (10000.0 * width)));
    CHECK(b.exp_density == doctest::Approx(std::exp(-(b.lo + 0.5 * width))));
    total += b.count;
  }
  const GapBin& over = rep.bins[40];
  CHECK(over.lo == 2.0);
  CHECK(std::isinf(over.hi));
  CHECK(over.exp_density == doctest::Approx(std::exp(-2.0)));
  total += over.count;
  CHECK(total == 10000);

  // Left-closed binning: a scaled gap exactly on an edge lands in the upper
  // bin. Verified indirectly by recounting with the same convention.
  std::vector<u64> recount(41, 0);
  for (double g : rep.gaps) {
    const double t = 10000.0 * g;
    const u64 idx =
        t >= 2.0 ? 40 : std::min<u64>(static_cast<u64>(t / width), 39);
    ++recount[idx];
  }
  for (std::size_t i = 0; i < 41; ++i) CHECK(recount[i] == rep.bins[i].count);
}

TEST_CASE("gap_report validation and CSV shape") {
  const FracSequence seq = build_sequence(100);
  CHECK_THROWS_AS(gap_report(seq, 9, 2.0), UsageError);
  CHECK_THROWS_AS(gap_report(seq, 10, 0.0), UsageError);

  const GapReport rep = gap_report(seq, 10, 2.0);
  const std::string csv = gap_report_to_csv(rep);
  CHECK(csv.rfind("bin_lo,bin_hi,count,density,exp_density\n", 0) == 0);
  const std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 12);  // header + 10 bins + overflow
}
