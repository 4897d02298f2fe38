#include "rootgap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "rootgap/constants.hpp"
#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

struct Cell {
  double a, b;
  std::complex<double> value;
  double err;
  bool operator<(const Cell& o) const { return err < o.err; }
};

}  // namespace

QuadResult integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, std::size_t max_cells, std::size_t initial_cells) {
  if (!(b > a)) return {0.0, 0.0, 0};
  if (initial_cells == 0) initial_cells = 1;
  std::priority_queue<Cell> heap;
  std::complex<double> total = 0.0;
  double total_err = 0.0;
  std::size_t n_cells = 0;
  auto push = [&](double lo, double hi) {
    QuadCell c = gk15(f, lo, hi);
    heap.push(Cell{lo, hi, c.value, c.err});
    total += c.value;
    total_err += c.err;
    ++n_cells;
  };
  const double h0 = (b - a) / static_cast<double>(initial_cells);
  for (std::size_t i = 0; i < initial_cells; ++i) {
    push(a + i * h0, i + 1 == initial_cells ? b : a + (i + 1) * h0);
  }
  while (total_err > abs_tol) {
    if (n_cells + 1 > max_cells) throw QuadratureBudget(abs_tol, total_err);
    Cell worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.err;
    --n_cells;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; accept its estimate as final.
      total += worst.value;
      total_err += 0.0;
      ++n_cells;
      if (heap.empty()) break;
      continue;
    }
    push(worst.a, mid);
    push(mid, worst.b);
  }
  return {total, total_err, n_cells};
}

double integrate_adaptive_real(const std::function<double(double)>& f,
                               double a, double b, double abs_tol,
                               std::size_t max_cells,
                               std::size_t initial_cells) {
  auto wrapped = [&f](double x) { return std::complex<double>(f(x), 0.0); };
  return integrate_adaptive(wrapped, a, b, abs_tol, max_cells, initial_cells)
      .value.real();
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw UsageError("gauss_legendre: order must be >= 1");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-angle initial guess; the
  // three-term recurrence gives P_n and P_n'.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      if (n == 1) {
        p1 = x;
      }
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = (n == 1) ? x : p1;
      double pm = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pm) / (x * x - 1.0);
      double dx = pn / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return cache.emplace(n, std::move(rule)).first->second;
}

CompositeRule composite_gauss(const std::vector<double>& breaks,
                              const std::vector<int>& nodes_per_piece) {
  if (breaks.size() < 2 || nodes_per_piece.size() + 1 != breaks.size()) {
    throw UsageError("composite_gauss: breaks/nodes size mismatch");
  }
  CompositeRule rule;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (!(b > a)) throw UsageError("composite_gauss: breaks must increase");
    const GaussRule& g = gauss_legendre(nodes_per_piece[i]);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      rule.x.push_back(0.5 * (a + b) + 0.5 * (b - a) * g.nodes[k]);
      rule.w.push_back(0.5 * (b - a) * g.weights[k]);
    }
  }
  return rule;
}

}  // namespace rootgap
