#include "rootgap/qset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "rootgap/errors.hpp"

using namespace rootgap;

TEST_CASE("desk mode enumerates prime pairs in the band") {
  // Q = 1 * sqrt(10000) = 100, members in [100, 200].
  const QSet qs = build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 3, 5.0, 11.0);
  CHECK(qs.q_scale == doctest::Approx(100.0));

  // Reference: exhaustive scan over prime pairs.
  std::set<u64> expected;
  for (u64 a : {5, 7, 11}) {
    for (u64 b = 2; b <= 40; ++b) {
      if (!is_prime(b) || b <= 3 || b == a) continue;
      const u64 q = a * b;
      if (q >= 100 && q <= 200) expected.insert(q);
    }
  }
  std::set<u64> got;
  for (const QMember& m : qs.members) got.insert(m.q);
  CHECK(got == expected);

  // The worked example member 145 = 5 * 29.
  const auto it = std::find_if(qs.members.begin(), qs.members.end(),
                               [](const QMember& m) { return m.q == 145; });
  REQUIRE(it != qs.members.end());
  CHECK(it->a_factor == 5);
  CHECK(it->b_factor == 29);
}

TEST_CASE("desk members satisfy the invariants") {
  const QSet qs = build_qset(1.4, 1000000, QSetMode::kDeskPrimePair);
  CHECK(qs.members.size() >= 20);
  u64 prev_q = 0;
  for (const QMember& m : qs.members) {
    CHECK(m.q == m.a_factor * m.b_factor);
    CHECK(m.a_factor != m.b_factor);
    CHECK(is_prime(m.a_factor));
    CHECK(is_prime(m.b_factor));
    CHECK(m.a_factor > qs.prime_floor);
    CHECK(m.b_factor > qs.prime_floor);
    CHECK(static_cast<double>(m.a_factor) >= qs.a_band_lo);
    CHECK(static_cast<double>(m.a_factor) <= qs.a_band_hi);
    CHECK(static_cast<double>(m.q) >= qs.q_scale);
    CHECK(static_cast<double>(m.q) <= 2.0 * qs.q_scale);
    CHECK(std::gcd(m.a_factor, m.b_factor) == 1);
    CHECK(mobius(m.q) != 0);  // squarefree
    CHECK(m.q > prev_q);      // sorted, duplicates removed
    prev_q = m.q;
  }
}

TEST_CASE("duplicate products collapse to one member") {
  // Band [11,13] above floor 7 makes 143 reachable as 11*13 and 13*11.
  const QSet qs = build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 7, 11.0, 13.0);
  int count143 = 0;
  for (const QMember& m : qs.members) {
    if (m.q == 143) {
      ++count143;
      CHECK(m.a_factor == 11);  // canonical smaller a_factor kept
      CHECK(m.b_factor == 13);
    }
    CHECK(m.q != 121);  // 11*11 needs distinct primes
    CHECK(m.q != 169);
  }
  CHECK(count143 == 1);
}

TEST_CASE("paper mode is infeasible at desk scale") {
  CHECK_THROWS_AS(build_qset(2.0, 10000, QSetMode::kPaper), EmptyQSet);
}

TEST_CASE("desk mode with unreachable band is empty") {
  CHECK_THROWS_AS(build_qset(1.0, 100, QSetMode::kDeskPrimePair, 30, 31.0, 37.0),
                  EmptyQSet);
}

TEST_CASE("build_qset validates parameters") {
  CHECK_THROWS_AS(build_qset(0.0, 10000, QSetMode::kDeskPrimePair), UsageError);
  CHECK_THROWS_AS(build_qset(1.0, 99, QSetMode::kDeskPrimePair), UsageError);
  CHECK_THROWS_AS(build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 2), UsageError);
  CHECK_THROWS_AS(build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 3, 13.0, 11.0),
                  UsageError);
}

TEST_CASE("phi stats with epsilon 1 reproduce the full sums") {
  const QSet qs = build_qset(1.4, 1000000, QSetMode::kDeskPrimePair);
  const PhiStats st = qset_phi_stats(qs, 1.0);
  CHECK(st.dev_window == 0.0);  // window covers every member exactly

  double full = 0.0, phi_total = 0.0;
  for (const QMember& m : qs.members) {
    full += static_cast<double>(euler_phi(m.q)) / static_cast<double>(m.q);
    phi_total += static_cast<double>(euler_phi(m.q));
  }
  CHECK(st.scaled_full_sum == doctest::Approx(full).epsilon(1e-14));
  CHECK(st.phi_total == doctest::Approx(phi_total).epsilon(1e-14));
  CHECK(st.lemma_estimate ==
        doctest::Approx(1.5 * qs.q_scale * full).epsilon(1e-14));
}

TEST_CASE("phi stats window deviation is small for a dense family") {
  // Wide band and large N: many members, member mass near-uniform in [Q, 2Q].
  const QSet qs =
      build_qset(1.4, 4000000, QSetMode::kDeskPrimePair, 3, 5.0, 60.0);
  CHECK(qs.members.size() >= 200);
  const PhiStats st = qset_phi_stats(qs, 0.5);
  CHECK(st.dev_window < 0.25);
  // L = sum phi(q) should track (3/2) Q sum phi(q)/q.
  CHECK(st.dev_total < 0.25);
}

TEST_CASE("phi stats validates input") {
  const QSet qs = build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 3, 5.0, 11.0);
  CHECK_THROWS_AS(qset_phi_stats(qs, 0.0), UsageError);
  CHECK_THROWS_AS(qset_phi_stats(qs, 1.5), UsageError);
  QSet empty = qs;
  empty.members.clear();
  CHECK_THROWS_AS(qset_phi_stats(empty, 0.5), UsageError);
}

TEST_CASE("qset serializes to the documented JSON shape") {
  const QSet qs = build_qset(1.0, 10000, QSetMode::kDeskPrimePair, 3, 5.0, 11.0);
  const nlohmann::json j = nlohmann::json::parse(qset_to_json(qs));
  CHECK(j["delta"].get<double>() == 1.0);
  CHECK(j["n"].get<u64>() == 10000);
  CHECK(j["mode"].get<std::string>() == "desk-prime-pair");
  CHECK(j["prime_floor"].get<u64>() == 3);
  REQUIRE(j["members"].is_array());
  REQUIRE(j["members"].size() == qs.members.size());
  for (std::size_t i = 0; i < qs.members.size(); ++i) {
    CHECK(j["members"][i][0].get<u64>() == qs.members[i].q);
    CHECK(j["members"][i][1].get<u64>() == qs.members[i].a_factor);
    CHECK(j["members"][i][2].get<u64>() == qs.members[i].b_factor);
  }
}
