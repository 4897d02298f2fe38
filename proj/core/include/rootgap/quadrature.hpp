#pragma once

// Quadrature building blocks: a 15-point Gauss–Kronrod cell, an adaptive
// (bisecting, worst-cell-first) driver for complex integrands, cached
// Gauss–Legendre rules of arbitrary order, and composite rules assembled from
// breakpoints. The GK15 cell is templated so hot integrands avoid
// std::function dispatch.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace rootgap {

namespace detail {
// Standard 15-point Kronrod extension of 7-point Gauss (positive abscissae).
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kGk15WeightsK = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGk15WeightsG = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};
}  // namespace detail

struct QuadCell {
  std::complex<double> value;
  double err;  // |Kronrod - Gauss| estimate (conservative)
};

template <class F>
QuadCell gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::complex<double> gauss = 0.0, kron = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = detail::kGk15Nodes[i];
    std::complex<double> fv;
    if (i == 7) {
      fv = f(c);
    } else {
      fv = f(c - h * x) + f(c + h * x);
    }
    kron += detail::kGk15WeightsK[i] * fv;
    if (i % 2 == 1) gauss += detail::kGk15WeightsG[i / 2] * fv;
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

struct QuadResult {
  std::complex<double> value;
  double err;
  std::size_t cells;
};

// Adaptive integration to absolute tolerance; the interval is first split
// into initial_cells equal cells, then the worst cell is bisected until the
// summed error estimate meets abs_tol. Throws QuadratureBudget when
// max_cells is exhausted.
QuadResult integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, std::size_t max_cells = 4096, std::size_t initial_cells = 1);

// Real-valued convenience wrapper.
double integrate_adaptive_real(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               std::size_t max_cells = 4096,
                               std::size_t initial_cells = 1);

// Gauss–Legendre rule of order n on [-1, 1]; cached after first computation.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Composite rule on consecutive intervals [breaks[i], breaks[i+1]] with
// nodes_per_piece[i] Gauss–Legendre nodes each, flattened in ascending order.
struct CompositeRule {
  std::vector<double> x;
  std::vector<double> w;

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
    return acc;
  }
};
CompositeRule composite_gauss(const std::vector<double>& breaks,
                              const std::vector<int>& nodes_per_piece);

}  // namespace rootgap
