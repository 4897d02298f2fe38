#include "rootgap/bump.hpp"

#include <array>
#include <cmath>

#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

double mollifier_core(double t) {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

constexpr int kRampIntervals = 4096;

struct RampTable {
  // Cumulative integral of the mollifier core at 4097 uniform nodes on
  // [-1, 1], normalized to end at 1, plus the normalizing constant.
  std::array<double, kRampIntervals + 1> cum{};
  double total = 0.0;

  RampTable() {
    const double h = 2.0 / kRampIntervals;
    cum[0] = 0.0;
    for (int i = 0; i < kRampIntervals; ++i) {
      // Composite Simpson with 8 subintervals per cell.
      const double a = -1.0 + i * h;
      const int sub = 8;
      const double hs = h / sub;
      double acc = mollifier_core(a) + mollifier_core(a + h);
      for (int j = 1; j < sub; ++j) {
        acc += (j % 2 ? 4.0 : 2.0) * mollifier_core(a + j * hs);
      }
      cum[i + 1] = cum[i] + acc * hs / 3.0;
    }
    total = cum[kRampIntervals];
    for (auto& c : cum) c /= total;
  }
};

const RampTable& ramp_table() {
  static const RampTable table;
  return table;
}

}  // namespace

double mollifier_ramp_deriv(double t) {
  return mollifier_core(t) / ramp_table().total;
}

double mollifier_ramp(double t) {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const RampTable& tab = ramp_table();
  const double h = 2.0 / kRampIntervals;
  double pos = (t + 1.0) / h;
  int i = static_cast<int>(pos);
  if (i >= kRampIntervals) i = kRampIntervals - 1;
  const double t0 = -1.0 + i * h;
  const double u = (t - t0) / h;
  // Cubic Hermite on [t_i, t_{i+1}] with exact endpoint derivatives.
  const double y0 = tab.cum[i], y1 = tab.cum[i + 1];
  const double d0 = mollifier_ramp_deriv(t0) * h;
  const double d1 = mollifier_ramp_deriv(t0 + h) * h;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 +
         (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * d1;
}

double mollifier_ramp_d2_l1() {
  // S' = core/I is unimodal with peak core(0) = exp(-1), so
  // int |S''| = 2 * max S' = 2 exp(-1) / I.
  return 2.0 * std::exp(-1.0) / ramp_table().total;
}

double Bump::value(double x) const {
  if (x <= lo || x >= hi) return 0.0;
  if (x >= plo && x <= phi) return amplitude;
  if (x < plo) {
    return amplitude * mollifier_ramp(2.0 * (x - lo) / (plo - lo) - 1.0);
  }
  return amplitude * mollifier_ramp(1.0 - 2.0 * (x - phi) / (hi - phi));
}

double Bump::derivative(double x) const {
  if (x <= lo || x >= hi || (x >= plo && x <= phi)) return 0.0;
  if (x < plo) {
    const double w = plo - lo;
    return amplitude * mollifier_ramp_deriv(2.0 * (x - lo) / w - 1.0) * 2.0 / w;
  }
  const double w = hi - phi;
  return -amplitude * mollifier_ramp_deriv(1.0 - 2.0 * (x - phi) / w) * 2.0 / w;
}

double Bump::integral() const {
  return amplitude * ((phi - plo) + 0.5 * (plo - lo) + 0.5 * (hi - phi));
}

double Bump::sup_abs_coordinate() const {
  return std::max(std::fabs(lo), std::fabs(hi));
}

double Bump::second_derivative_l1() const {
  const double s2 = mollifier_ramp_d2_l1();
  return amplitude * s2 * (2.0 / (plo - lo) + 2.0 / (hi - phi));
}

Bump make_bump(double lo, double plo, double phi, double hi,
               BumpNormalization norm) {
  if (!(lo < plo && plo <= phi && phi < hi)) {
    throw UsageError("make_bump: need lo < plo <= phi < hi");
  }
  Bump b{lo, plo, phi, hi, 1.0};
  if (norm == BumpNormalization::kUnitIntegral) {
    b.amplitude = 1.0 / b.integral();
  }
  return b;
}

TestFunctionSet make_test_functions(double s, double eta) {
  if (!(s > 0.0)) throw UsageError("make_test_functions: need s > 0");
  if (!(eta > 0.0 && eta < 0.01)) {
    throw UsageError("make_test_functions: need 0 < eta < 1/100");
  }
  if (!(eta < s)) throw UsageError("make_test_functions: need eta < s");
  TestFunctionSet tf;
  tf.s = s;
  tf.eta = eta;
  tf.Phi = make_bump(0.0, eta, s, s + eta);
  tf.V = make_bump(1.0 - eta, 1.0, 2.0, 2.0 + eta);
  tf.phi = make_bump(-0.01, -0.005, 0.005, 0.01,
                     BumpNormalization::kUnitIntegral);
  tf.w = make_bump(-0.5, -0.25, 0.25, 0.5);
  return tf;
}

}  // namespace rootgap
