#include "rootgap/phase_ident.hpp"

#include <numeric>

#include "doctest.h"
#include "rootgap/errors.hpp"

using namespace rootgap;

TEST_CASE("worked example evaluates to residue zero") {
  // q = 5, u = (1,2), v = (1,7): cross-term 1*7 - 2*1 = 5, so l = (0,1).
  const Rational r = phase_reduction_check(5, {1, 2}, {1, 7});
  CHECK(r == 0);
}

TEST_CASE("single-term tuples always reduce to zero") {
  CHECK(phase_reduction_check(5, {1}, {1}) == 0);
  CHECK(phase_reduction_check(7, {3}, {-4}) == 0);
  CHECK(phase_reduction_check(9901, {2}, {13}) == 0);
}

TEST_CASE("negative v is handled by the signed-denominator convention") {
  // q = 5, u = (1,2), v = (1,-3): cross-term 1*(-3) - 2*1 = -5, l = (0,-1).
  // Hand evaluation: both sides are 11/12 mod 1.
  const Rational r = phase_reduction_check(5, {1, 2}, {1, -3});
  CHECK(r == 0);
}

TEST_CASE("hypothesis violations name the offending index") {
  // u1 v2 - u2 v1 = 1*3 - 2*1 = 1, not divisible by 5.
  CHECK_THROWS_WITH_AS(phase_reduction_check(5, {1, 2}, {1, 3}),
                       doctest::Contains("component 2"), HypothesisFailed);
  // gcd(u1, q) = 3.
  CHECK_THROWS_WITH_AS(phase_reduction_check(15, {3, 1}, {1, 1}),
                       doctest::Contains("component 1"), HypothesisFailed);
  // v2 = 0.
  CHECK_THROWS_AS(phase_reduction_check(5, {1, 1}, {1, 0}), HypothesisFailed);
}

TEST_CASE("usage validation") {
  CHECK_THROWS_AS(phase_reduction_check(4, {1}, {1}), UsageError);   // even
  CHECK_THROWS_AS(phase_reduction_check(1, {1}, {1}), UsageError);   // too small
  CHECK_THROWS_AS(phase_reduction_check(-5, {1}, {1}), UsageError);  // negative
  CHECK_THROWS_AS(phase_reduction_check(5, {}, {}), UsageError);     // empty
  CHECK_THROWS_AS(phase_reduction_check(5, {1, 2}, {1}), UsageError);
}

TEST_CASE("random admissible tuples reduce to exactly zero") {
  Rng rng(0x1de47u);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(4));
    const PhaseTuple t = random_phase_tuple(rng, k, 10000);
    REQUIRE(t.q % 2 == 1);
    REQUIRE(t.q <= 10000);
    const Rational r = phase_reduction_check(t.q, t.u, t.v);
    REQUIRE(r == 0);
  }
}

TEST_CASE("generator produces both v signs and all k") {
  Rng rng(0x5ee6u);
  bool neg_v = false, pos_v = false;
  for (int trial = 0; trial < 50; ++trial) {
    const PhaseTuple t = random_phase_tuple(rng, 4, 1000);
    for (i64 v : t.v) (v < 0 ? neg_v : pos_v) = true;
  }
  CHECK(neg_v);
  CHECK(pos_v);
}
