#include "rootgap/jutila.hpp"

#include <cmath>

#include "doctest.h"
#include "rootgap/errors.hpp"
#include "rootgap/quadrature.hpp"

using namespace rootgap;

namespace {

// A single prime modulus: every Ramanujan sum is either -1 or q - 1, and the
// approximant consists of phi(q) disjoint bumps, so the L^2 distance has a
// closed form and a cheap direct quadrature.
QSet one_prime_qset(u64 n) {
  QSet qs;
  qs.delta = 1.0;
  qs.n = n;
  qs.q_scale = 35.0;
  qs.mode = QSetMode::kDeskPrimePair;
  qs.prime_floor = 7;
  qs.members = {{53, 53, 1}};
  return qs;
}

// Direct alpha-integration of |1 - chi|^2: off the arcs the integrand is 1;
// each arc contributes (1/N) int ((1 - (N/L) phi(tau))^2 - 1) d tau.
double direct_l2(const MinorArcMeasure& mu, u64 n) {
  const Bump& phi = mu.test_functions().phi;
  const double nd = static_cast<double>(n);
  const double big_l = static_cast<double>(mu.L());
  double total = 1.0;
  for (std::size_t i = 0; i < mu.arcs().size(); ++i) {
    total += integrate_adaptive_real(
                 [&](double tau) {
                   const double c = 1.0 - nd / big_l * phi.value(tau);
                   return c * c - 1.0;
                 },
                 phi.lo, phi.hi, 1e-8, 32768, 8) /
             nd;
  }
  return total;
}

}  // namespace

TEST_CASE("one-prime family: Plancherel route vs direct quadrature vs closed form") {
  const u64 n = 400;
  const QSet qs = one_prime_qset(n);
  const TestFunctionSet tf = make_test_functions(2.0, 1.0 / 200.0);
  const MinorArcMeasure mu(qs, tf);
  REQUIRE(mu.L() == 52);
  REQUIRE(mu.arcs().size() == 52);

  const JutilaL2 out = jutila_l2(mu, n, 2048 * n);
  const double direct = direct_l2(mu, n);

  // Disjoint identical bumps: integral is (N/L) ||phi||_2^2 - 1 exactly.
  const double phi_l2 = integrate_adaptive_real(
      [&](double tau) {
        const double p = tf.phi.value(tau);
        return p * p;
      },
      tf.phi.lo, tf.phi.hi, 1e-10, 32768, 8);
  const double closed = static_cast<double>(n) / 52.0 * phi_l2 - 1.0;

  CHECK(std::fabs(direct - closed) / closed < 1e-9);
  CHECK(std::fabs(out.lhs - direct) / direct < 1e-6);
  CHECK(out.tail_bound >= 0.0);
  CHECK(out.tail_bound <= 0.1 * out.lhs);
  CHECK(out.max_ell == 2048 * n);
}

TEST_CASE("desk ladder: value stays within ten times the reference bound") {
  const TestFunctionSet tf = make_test_functions(2.0, 1.0 / 200.0);
  for (u64 n : {u64{10000}, u64{40000}}) {
    const QSet qs = build_qset(1.2, n, QSetMode::kDeskPrimePair);
    const MinorArcMeasure mu(qs, tf);
    const JutilaL2 out = jutila_l2(mu, n, 2048 * n);
    CHECK(out.lhs > 0.0);
    CHECK(out.bound > 0.0);
    CHECK(out.lhs / out.bound <= 10.0);
  }
}

TEST_CASE("head grows toward the full value as max_ell increases") {
  const u64 n = 400;
  const QSet qs = one_prime_qset(n);
  const TestFunctionSet tf = make_test_functions(2.0, 1.0 / 200.0);
  const MinorArcMeasure mu(qs, tf);

  const double coarse = jutila_l2(mu, n, 320 * n).lhs;
  const double fine = jutila_l2(mu, n, 2048 * n).lhs;
  CHECK(coarse <= fine + 1e-12);
  CHECK(fine - coarse < 1e-4 * fine);
}

TEST_CASE("validation and truncation gate") {
  const u64 n = 400;
  const QSet qs = one_prime_qset(n);
  const TestFunctionSet tf = make_test_functions(2.0, 1.0 / 200.0);
  const MinorArcMeasure mu(qs, tf);

  CHECK_THROWS_AS(jutila_l2(mu, n, n - 1), UsageError);    // max_ell < n
  CHECK_THROWS_AS(jutila_l2(mu, n + 1, 512 * n), UsageError);  // n mismatch

  // At max_ell = n the analytic tail bound dwarfs the head.
  CHECK_THROWS_AS(jutila_l2(mu, n, n), TruncationTooCoarse);
}
