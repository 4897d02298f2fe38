#pragma once

// Fourier transforms of plateau bumps under the convention
//   fhat(xi) = int f(y) e(-xi y) dy,   e(t) = exp(2 pi i t).
// The plateau piece is integrated in closed form; the two ramp pieces go
// through adaptive Gauss–Kronrod with oscillation-aware initial splitting.
// FourierTable memoizes fhat on a uniform grid (cubic interpolation, grid
// step chosen from the analytic bound |fhat''''| <= (2 pi Y)^4 ||f||_1).

#include <complex>
#include <cstddef>
#include <vector>

#include "rootgap/bump.hpp"

namespace rootgap {

inline std::complex<double> expi2pi(double t) {
  const double a = 6.283185307179586476925286766559 * t;
  return {std::cos(a), std::sin(a)};
}

std::complex<double> fourier_transform(const Bump& f, double xi,
                                       double abs_tol = 1e-11);

struct DecayReport {
  int order;          // the exponent A that was probed
  double sup_value;   // max over the grid of |fhat(xi)| * (1 + |xi|)^A
  double argmax_xi;   // grid point attaining the max
  std::size_t n_points;
};

// Probes the decay |fhat(xi)| <= C / (1 + |xi|)^A on the given grid.
// Requires 1 <= A <= 12 and a nonempty grid (UsageError otherwise).
DecayReport check_decay(const Bump& f, int order,
                        const std::vector<double>& xi_grid);

class FourierTable {
 public:
  // Tabulates fhat on [0, xi_max] (negative arguments use conjugate
  // symmetry, valid because bumps are real). interp_tol controls the grid
  // step; point_tol is the per-node quadrature tolerance.
  FourierTable(const Bump& f, double xi_max, double interp_tol = 1e-9,
               double point_tol = 1e-11);

  std::complex<double> operator()(double xi) const;
  double xi_max() const { return xi_max_; }
  double step() const { return h_; }
  std::size_t size() const { return values_.size(); }

 private:
  double xi_max_;
  double h_;
  std::vector<std::complex<double>> values_;  // fhat(j * h), j >= 0
};

}  // namespace rootgap
