#include "rootgap/fixedpoint.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>
#include <doctest.h>

#include "rootgap/errors.hpp"
#include "rootgap/rng.hpp"

using namespace rootgap;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: frac(sqrt(n)) * 2^96 computed with integer square roots
// at 256-bit precision: floor(sqrt(n * 2^192)) - isqrt(n) * 2^96.
cpp_int oracle_frac_raw(u64 n) {
  cpp_int big = cpp_int(n) << 192;
  cpp_int root = sqrt(big);  // floor square root
  cpp_int m = sqrt(cpp_int(n));
  return root - (m << 96);
}

u128 to_u128(const cpp_int& v) {
  cpp_int lo = v & cpp_int(0xffffffffffffffffull);
  cpp_int hi = v >> 64;
  return (u128(hi.convert_to<u64>()) << 64) | lo.convert_to<u64>();
}

}  // namespace

TEST_CASE("isqrt_u64 exact") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(1) == 1);
  CHECK(isqrt_u64(3) == 1);
  CHECK(isqrt_u64(4) == 2);
  CHECK(isqrt_u64(99) == 9);
  CHECK(isqrt_u64((1ull << 62) - 1) == 2147483647ull);
  CHECK(isqrt_u64(1ull << 62) == (1ull << 31));
  Rng rng(9);
  for (int t = 0; t < 20000; ++t) {
    u64 n = rng.next_u64() >> (rng.next_below(40));
    u64 r = isqrt_u64(n);
    CHECK(u128(r) * r <= n);
    CHECK(u128(r + 1) * (r + 1) > n);
  }
}

TEST_CASE("frac_sqrt is exactly zero on perfect squares") {
  for (u64 m : {0ull, 1ull, 2ull, 3ull, 1000ull, 123456789ull, 2147483647ull}) {
    CHECK(frac_sqrt(m * m).raw == 0);
  }
}

TEST_CASE("frac_sqrt digits of sqrt(2) and sqrt(5)") {
  CHECK(frac96_to_decimal(frac_sqrt(2), 25) == "0.4142135623730950488016887");
  CHECK(frac96_to_decimal(frac_sqrt(5), 25) == "0.2360679774997896964091736");
  CHECK(frac96_to_decimal(frac_sqrt(3), 20) == "0.73205080756887729352");
}

TEST_CASE("frac_sqrt against 256-bit integer oracle") {
  Rng rng(2024);
  for (int t = 0; t < 20000; ++t) {
    u64 n = rng.next_below((1ull << 62) - 2) + 1;
    cpp_int exact = oracle_frac_raw(n);
    u128 got = frac_sqrt(n).raw;
    u128 want = to_u128(exact);
    u128 diff = got > want ? got - want : want - got;
    CHECK(diff <= 4);  // a few units of 2^-96
  }
  // Hard cases near the top of a unit interval: n = (m+1)^2 - 1.
  for (u64 m : {10ull, 1000ull, 99999ull, 2147483646ull}) {
    u64 n = (m + 1) * (m + 1) - 1;
    if (n >= (1ull << 62)) continue;
    cpp_int exact = oracle_frac_raw(n);
    u128 got = frac_sqrt(n).raw;
    u128 want = to_u128(exact);
    u128 diff = got > want ? got - want : want - got;
    CHECK(diff <= 4);
  }
}

TEST_CASE("frac_sqrt rejects n >= 2^62") {
  CHECK_THROWS_AS(frac_sqrt(1ull << 62), UsageError);
  CHECK_NOTHROW(frac_sqrt((1ull << 62) - 1));
}

TEST_CASE("frac96 conversions and mod-1 arithmetic") {
  Frac96 third = frac96_from_rational(1, 3);
  CHECK(frac96_to_decimal(third, 10) == "0.3333333333");
  CHECK(frac96_to_double(third) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  Frac96 a = frac96_from_rational(7, 10);
  Frac96 b = frac96_from_rational(6, 10);
  Frac96 s = frac96_add_mod1(a, b);  // 1.3 mod 1 = 0.3
  CHECK(frac96_to_double(s) == doctest::Approx(0.3).epsilon(1e-12));
  Frac96 d = frac96_sub_mod1(b, a);  // -0.1 mod 1 = 0.9
  CHECK(frac96_to_double(d) == doctest::Approx(0.9).epsilon(1e-12));

  CHECK(frac96_from_double(1.75).raw == frac96_from_double(0.75).raw);
  CHECK(frac96_from_double(-0.25).raw == frac96_from_double(0.75).raw);
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    double x = rng.next_double();
    CHECK(frac96_to_double(frac96_from_double(x)) ==
          doctest::Approx(x).epsilon(1e-15));
  }
  CHECK_THROWS_AS(frac96_from_rational(3, 3), UsageError);
  CHECK_THROWS_AS(frac96_from_rational(1, 0), UsageError);
}

TEST_CASE("frac96 ordering matches rational ordering") {
  CHECK(frac96_from_rational(1, 3) < frac96_from_rational(1, 2));
  CHECK(frac_sqrt(2) < frac_sqrt(8));  // 0.414... < 0.828...
  CHECK(frac_sqrt(5) < frac_sqrt(2));  // 0.236... < 0.414...
}
