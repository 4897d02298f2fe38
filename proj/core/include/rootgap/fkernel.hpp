#pragma once

// Oscillatory-integral engine around the kernel
//   F(xi, eta) = int_0^inf Phihat(2 xi x) e(2 xi theta x) x V(x^2) e(-eta x/2) dx,
// the Fresnel-type identity
//   int e(-v y^2) f(y) dy
//     = e(-sgn(v)/8) / sqrt(2|v|) * int e(xi^2 / 4v) fhat(xi) dxi,
// and empirical decay probes along the xi- and eta-axes. Evaluation is
// oscillation-aware adaptive Gauss-Kronrod over the support of V(x^2), with
// Phihat memoized on a uniform grid that can be shared across kernels built
// from the same test-function set.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rootgap/bump.hpp"
#include "rootgap/fourier.hpp"

namespace rootgap {

struct FQuadrature {
  std::size_t max_panels = 20000;  // panel budget per evaluation
  double target_abs_err = 1e-9;    // must be >= 1e-12
  bool memoize_phi_hat = true;     // false: every Phihat call is a fresh transform
};

// Immutable after construction; the memo table is built eagerly so eval() is
// lock-free. `tf` must outlive the kernel. `theta` is the rescaled N*theta of
// the arc decomposition.
class FKernel {
 public:
  // phi_table may be shared across kernels with the same test functions; when
  // absent (and memoization is on) a fresh table covering |2 xi x| <= phi_xi_max
  // is built.
  FKernel(const TestFunctionSet& tf, double theta, FQuadrature quadrature = {},
          std::shared_ptr<const FourierTable> phi_table = nullptr,
          double phi_xi_max = 8.0);

  std::complex<double> eval(double xi, double eta) const;

  const TestFunctionSet& test_functions() const { return *tf_; }
  double theta() const { return theta_; }
  const FQuadrature& quadrature() const { return quad_; }
  std::shared_ptr<const FourierTable> phi_table() const { return phi_table_; }

  // Phihat(0) * (1/2) Vhat(0), an upper bound for |F| everywhere.
  double trivial_bound() const;

 private:
  std::complex<double> phi_hat(double arg) const;

  const TestFunctionSet* tf_;
  double theta_;
  FQuadrature quad_;
  std::shared_ptr<const FourierTable> phi_table_;
  double x_break_[4];  // sqrt of {V.lo, V.plo, V.phi, V.hi}
};

std::complex<double> f_eval(const FKernel& k, double xi, double eta);

// Eagerly builds a Phihat table for sharing across many kernels.
std::shared_ptr<const FourierTable> make_phi_table(const TestFunctionSet& tf,
                                                   double xi_max,
                                                   double interp_tol = 1e-11);

// Returns (LHS, RHS) of the Fresnel-type identity for a compactly supported
// real bump f, each side accurate to about 1e-7. Requires v != 0.
std::pair<std::complex<double>, std::complex<double>> fresnel_identity_check(
    double v, const Bump& f);

enum class ProbeAxis { kXi, kEta };

struct ProbePoint {
  double coord;   // the probed coordinate
  double abs_f;   // |F| at the probe point
  double ratio;   // |F| * (1 + |coord|^A) / (1 + |theta|^A)
};

struct DecayProbeReport {
  ProbeAxis axis;
  int order;          // the exponent A
  double theta;
  double other_coord; // frozen coordinate of the non-probed axis
  double sup_ratio = 0.0;
  double argmax = 0.0;
  std::size_t n_included = 0;
  std::size_t n_excluded = 0;  // eta-axis points failing |eta| > 50 |xi theta|
  std::vector<ProbePoint> points;
};

// Sweeps |F| along one axis (the other frozen at other_coord) and records the
// empirical constant sup |F| (1 + |coord|^A) / (1 + |theta|^A). Requires
// 0 <= A <= 8 and a nonempty grid. On the eta-axis, points violating the gate
// |eta| > 50 |xi theta| are excluded from the sup (counted in n_excluded).
DecayProbeReport decay_probe(const FKernel& k, ProbeAxis axis, int order,
                             const std::vector<double>& grid,
                             double other_coord = 0.0);

std::string decay_probe_to_csv(const DecayProbeReport& rep);

// Fourier transform of W(y) = y V(y^2) over the positive half-line, to 1e-9.
std::complex<double> w_hat(const TestFunctionSet& tf, double xi);

}  // namespace rootgap
