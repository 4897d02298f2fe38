#include "rootgap/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "rootgap/constants.hpp"
#include "rootgap/errors.hpp"
#include "rootgap/parallel.hpp"
#include "rootgap/quadrature.hpp"

namespace rootgap {

namespace {

double sinc(double t) {
  const double a = kPi * t;
  if (std::fabs(a) < 1e-8) return 1.0 - a * a / 6.0;
  return std::sin(a) / a;
}

// Exact transform of the indicator of [a, b] times amplitude.
std::complex<double> plateau_transform(double amp, double a, double b,
                                       double xi) {
  const double len = b - a;
  return amp * len * sinc(xi * len) * expi2pi(-xi * 0.5 * (a + b));
}

std::complex<double> ramp_transform(const Bump& f, double a, double b,
                                    double xi, double tol) {
  auto integrand = [&f, xi](double y) { return f.value(y) * expi2pi(-xi * y); };
  const double len = b - a;
  const std::size_t cells =
      std::max<std::size_t>(1, static_cast<std::size_t>(
                                   std::ceil(std::fabs(xi) * len / 4.0)));
  return integrate_adaptive(integrand, a, b, tol, 4096, cells).value;
}

}  // namespace

std::complex<double> fourier_transform(const Bump& f, double xi,
                                       double abs_tol) {
  const double tol = abs_tol / 3.0;
  std::complex<double> acc = plateau_transform(f.amplitude, f.plo, f.phi, xi);
  acc += ramp_transform(f, f.lo, f.plo, xi, tol);
  acc += ramp_transform(f, f.phi, f.hi, xi, tol);
  return acc;
}

DecayReport check_decay(const Bump& f, int order,
                        const std::vector<double>& xi_grid) {
  if (order < 1 || order > 12) {
    throw UsageError("check_decay: order must be in [1, 12]");
  }
  if (xi_grid.empty()) throw UsageError("check_decay: empty grid");
  std::vector<double> vals(xi_grid.size());
  parallel_for(xi_grid.size(), [&](std::size_t i) {
    const double xi = xi_grid[i];
    vals[i] = std::abs(fourier_transform(f, xi)) *
              std::pow(1.0 + std::fabs(xi), order);
  });
  DecayReport rep{order, -1.0, 0.0, xi_grid.size()};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] > rep.sup_value) {
      rep.sup_value = vals[i];
      rep.argmax_xi = xi_grid[i];
    }
  }
  return rep;
}

FourierTable::FourierTable(const Bump& f, double xi_max, double interp_tol,
                           double point_tol) {
  if (!(xi_max > 0.0)) throw UsageError("FourierTable: xi_max must be > 0");
  xi_max_ = xi_max;
  // Cubic interpolation error <= 0.024 h^4 max|fhat''''|, and
  // |fhat''''| <= (2 pi Y)^4 ||f||_1 with Y the support radius.
  const double y = std::max(f.sup_abs_coordinate(), 1e-3);
  const double m4 = std::pow(2.0 * kPi * y, 4) * f.integral();
  double h = std::pow(interp_tol / (0.024 * m4), 0.25);
  h = std::min(h, xi_max / 8.0);
  const std::size_t n =
      static_cast<std::size_t>(std::ceil(xi_max / h)) + 4;
  h_ = h;
  values_.resize(n);
  parallel_for(n, [&](std::size_t j) {
    values_[j] = fourier_transform(f, static_cast<double>(j) * h, point_tol);
  });
}

std::complex<double> FourierTable::operator()(double xi) const {
  const bool neg = xi < 0.0;
  const double axi = neg ? -xi : xi;
  if (axi > xi_max_ + 2.0 * h_) {
    throw UsageError("FourierTable: argument beyond tabulated range");
  }
  // 4-point cubic Lagrange; stencil j-1 .. j+2 with reflection below 0
  // (values are conjugate-even) and clamping at the top.
  long j = static_cast<long>(std::floor(axi / h_));
  const long last = static_cast<long>(values_.size()) - 1;
  if (j > last - 2) j = last - 2;
  if (j < 0) j = 0;
  auto fetch = [this](long k) {
    return k >= 0 ? values_[static_cast<std::size_t>(k)]
                  : std::conj(values_[static_cast<std::size_t>(-k)]);
  };
  const double u = axi / h_ - static_cast<double>(j);
  const std::complex<double> fm1 = fetch(j - 1), f0 = fetch(j), f1 = fetch(j + 1),
                             f2 = fetch(j + 2);
  const double um1 = u + 1.0, u0 = u, u1 = u - 1.0, u2 = u - 2.0;
  const std::complex<double> val =
      fm1 * (u0 * u1 * u2 / -6.0) + f0 * (um1 * u1 * u2 / 2.0) +
      f1 * (um1 * u0 * u2 / -2.0) + f2 * (um1 * u0 * u1 / 6.0);
  return neg ? std::conj(val) : val;
}

}  // namespace rootgap
