#pragma once

// Smooth plateau bumps built from the standard C-infinity mollifier ramp
//   S(t) = (1/I) * int_{-1}^{t} exp(-1/(1-y^2)) dy,   I = int_{-1}^{1} ...,
// so S rises from 0 at t=-1 to 1 at t=1 and S(t) + S(-t) = 1. A Bump is
//   0 on (-inf, lo],  amplitude * ramp up on [lo, plo],
//   amplitude on [plo, phi],  amplitude * ramp down on [phi, hi],  0 beyond.
// Exact integral: amplitude * ((phi - plo) + (plo - lo)/2 + (hi - phi)/2).

#include <string>

namespace rootgap {

// Ramp S(t), its derivative S'(t) = exp(-1/(1-t^2))/I, and the L1 norm of the
// second derivative int_{-1}^{1} |S''| = 2 exp(-1) / I (S' is unimodal).
double mollifier_ramp(double t);
double mollifier_ramp_deriv(double t);
double mollifier_ramp_d2_l1();

enum class BumpNormalization { kPlateauOne, kUnitIntegral };

struct Bump {
  double lo = 0, plo = 0, phi = 0, hi = 0;  // lo < plo <= phi < hi
  double amplitude = 1.0;

  double value(double x) const;
  double derivative(double x) const;
  double integral() const;           // exact, see above
  double sup_abs_coordinate() const; // max(|lo|, |hi|)
  double second_derivative_l1() const;
};

// Validates the breakpoint ordering (UsageError otherwise).
Bump make_bump(double lo, double plo, double phi, double hi,
               BumpNormalization norm = BumpNormalization::kPlateauOne);

// The four test functions used throughout: Phi with plateau [eta, s] and
// support (0, s+eta); V with plateau [1, 2] and support (1-eta, 2+eta);
// a unit-integral arc weight phi supported in [-1/100, 1/100]; and an even
// cutoff w with w(0) = 1 supported in (-1/2, 1/2).
struct TestFunctionSet {
  double s = 2.0;
  double eta = 1.0 / 200.0;
  Bump Phi, V, phi, w;
};

// Requires s > 0 and 0 < eta < 1/100 (UsageError otherwise).
TestFunctionSet make_test_functions(double s, double eta);

}  // namespace rootgap
