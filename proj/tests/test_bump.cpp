#include "rootgap/bump.hpp"

#include <cmath>

#include <doctest.h>

#include "rootgap/errors.hpp"
#include "rootgap/quadrature.hpp"

using namespace rootgap;

namespace {

double core(double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

// Reference ramp via adaptive quadrature, fully independent of the
// tabulated cumulative used by mollifier_ramp.
double ramp_reference(double t) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double total = integrate_adaptive_real(core, -1.0, 1.0, 1e-15);
  return integrate_adaptive_real(core, -1.0, t, 1e-15) / total;
}

}  // namespace

TEST_CASE("mollifier ramp endpoints, symmetry, monotonicity") {
  CHECK(mollifier_ramp(-1.0) == 0.0);
  CHECK(mollifier_ramp(-1.5) == 0.0);
  CHECK(mollifier_ramp(1.0) == 1.0);
  CHECK(mollifier_ramp(2.0) == 1.0);
  CHECK(mollifier_ramp(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  double prev = -1.0;
  for (int i = 0; i <= 200; ++i) {
    double t = -1.0 + 2.0 * i / 200.0;
    double v = mollifier_ramp(t);
    CHECK(v >= prev - 1e-15);
    CHECK(v + mollifier_ramp(-t) == doctest::Approx(1.0).epsilon(1e-13));
    prev = v;
  }
}

TEST_CASE("mollifier ramp matches independent quadrature") {
  for (double t : {-0.97, -0.75, -0.5, -0.31, -0.1, 0.0, 0.13, 0.5, 0.77,
                   0.9, 0.99}) {
    CHECK(mollifier_ramp(t) == doctest::Approx(ramp_reference(t)).epsilon(1e-11));
  }
}

TEST_CASE("make_bump validation") {
  CHECK_THROWS_AS(make_bump(0.0, 0.0, 1.0, 2.0), UsageError);  // lo == plo
  CHECK_THROWS_AS(make_bump(0.0, 0.5, 0.4, 1.0), UsageError);  // plo > phi
  CHECK_THROWS_AS(make_bump(0.0, 0.5, 1.5, 1.0), UsageError);  // phi >= hi
  CHECK_NOTHROW(make_bump(0.0, 0.5, 0.5, 1.0));                // point plateau
}

TEST_CASE("bump values: plateau exact, support sharp, range") {
  Bump b = make_bump(-1.0, 0.0, 2.0, 3.0);
  CHECK(b.value(-1.0) == 0.0);
  CHECK(b.value(-2.0) == 0.0);
  CHECK(b.value(3.0) == 0.0);
  CHECK(b.value(5.0) == 0.0);
  CHECK(b.value(0.0) == 1.0);
  CHECK(b.value(1.0) == 1.0);
  CHECK(b.value(2.0) == 1.0);
  for (int i = 0; i <= 400; ++i) {
    double x = -1.5 + 5.0 * i / 400.0;
    double v = b.value(x);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  // Smooth decay to zero near the edges.
  CHECK(b.value(-0.999) < 1e-10);
  CHECK(b.value(2.999) < 1e-10);
}

TEST_CASE("bump integral closed form vs quadrature") {
  Bump b = make_bump(0.0, 0.25, 1.5, 2.0);
  double expect = (1.5 - 0.25) + 0.5 * 0.25 + 0.5 * 0.5;
  CHECK(b.integral() == doctest::Approx(expect).epsilon(1e-15));
  double numeric = integrate_adaptive_real(
      [&b](double x) { return b.value(x); }, -0.5, 2.5, 1e-12, 1u << 14);
  CHECK(numeric == doctest::Approx(b.integral()).epsilon(1e-11));
}

TEST_CASE("bump derivative matches finite differences") {
  Bump b = make_bump(0.0, 1.0, 2.0, 4.0);
  const double h = 1e-6;
  for (double x : {0.3, 0.7, 0.95, 2.5, 3.1, 3.9}) {
    double fd = (b.value(x + h) - b.value(x - h)) / (2.0 * h);
    CHECK(b.derivative(x) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK(b.derivative(1.5) == 0.0);
  CHECK(b.derivative(-1.0) == 0.0);
  CHECK(b.derivative(5.0) == 0.0);
}

TEST_CASE("unit-integral normalization") {
  Bump b = make_bump(-0.01, -0.005, 0.005, 0.01,
                     BumpNormalization::kUnitIntegral);
  CHECK(b.integral() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(b.amplitude == doctest::Approx(1.0 / 0.015).epsilon(1e-15));
}

TEST_CASE("make_test_functions geometry and normalizations") {
  TestFunctionSet tf = make_test_functions(2.0, 1.0 / 200.0);
  CHECK(tf.Phi.lo == 0.0);
  CHECK(tf.Phi.plo == doctest::Approx(0.005));
  CHECK(tf.Phi.phi == 2.0);
  CHECK(tf.Phi.hi == doctest::Approx(2.005));
  CHECK(tf.Phi.integral() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(tf.V.integral() == doctest::Approx(1.005).epsilon(1e-14));
  CHECK(tf.V.value(1.0) == 1.0);
  CHECK(tf.V.value(2.0) == 1.0);
  CHECK(tf.V.value(0.995) == 0.0);   // support edge
  CHECK(tf.V.value(0.996) > 0.0);
  CHECK(tf.V.value(0.9975) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(tf.phi.integral() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tf.phi.lo == -0.01);
  CHECK(tf.phi.hi == 0.01);
  CHECK(tf.w.value(0.0) == 1.0);
  CHECK(tf.w.lo == -0.5);
  CHECK(tf.w.hi == 0.5);
  // w is even.
  for (double x : {0.1, 0.26, 0.33, 0.45}) {
    CHECK(tf.w.value(x) == doctest::Approx(tf.w.value(-x)).epsilon(1e-14));
  }
}

TEST_CASE("make_test_functions validation") {
  CHECK_THROWS_AS(make_test_functions(0.0, 0.005), UsageError);
  CHECK_THROWS_AS(make_test_functions(-1.0, 0.005), UsageError);
  CHECK_THROWS_AS(make_test_functions(2.0, 0.0), UsageError);
  CHECK_THROWS_AS(make_test_functions(2.0, 0.01), UsageError);
  CHECK_THROWS_AS(make_test_functions(2.0, 0.02), UsageError);
  CHECK_NOTHROW(make_test_functions(2.0, 0.0099));
  CHECK_NOTHROW(make_test_functions(1.0, 0.001));
}

TEST_CASE("second derivative L1 norm is consistent with quadrature") {
  // ramp d2 L1 on [-1,1] equals 2*max(S') = 2*core(0)/I.
  double total = integrate_adaptive_real(core, -1.0, 1.0, 1e-14);
  CHECK(mollifier_ramp_d2_l1() ==
        doctest::Approx(2.0 * std::exp(-1.0) / total).epsilon(1e-12));
  Bump b = make_bump(0.0, 1.0, 2.0, 3.0);
  // Numeric: integrate |d/dx derivative| via fine finite differences.
  double acc = 0.0;
  const int n = 20000;
  const double h = 3.0 / n;
  for (int i = 0; i < n; ++i) {
    double x0 = i * h, x1 = (i + 1) * h;
    acc += std::fabs(b.derivative(x1) - b.derivative(x0));
  }
  CHECK(b.second_derivative_l1() == doctest::Approx(acc).epsilon(1e-3));
}
