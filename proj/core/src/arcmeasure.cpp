#include "rootgap/arcmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rootgap/errors.hpp"
#include "rootgap/parallel.hpp"
#include "rootgap/quadrature.hpp"

namespace rootgap {

MinorArcMeasure::MinorArcMeasure(const QSet& qs, const TestFunctionSet& tf,
                                 int nodes)
    : qset_(&qs), tf_(&tf) {
  if (qs.members.empty()) throw UsageError("MinorArcMeasure: empty QSet");
  if (nodes < 16 || nodes % 4 != 0) {
    throw UsageError("MinorArcMeasure: nodes must be a multiple of 4, >= 16");
  }
  const Bump& phi = tf.phi;
  const CompositeRule rule =
      composite_gauss({phi.lo, phi.plo, phi.phi, phi.hi},
                      {nodes / 4, nodes / 2, nodes / 4});
  nodes_.reserve(rule.x.size());
  double mass = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double w = rule.w[i] * phi.value(rule.x[i]);
    nodes_.push_back({rule.x[i], w});
    mass += w;
  }
  // phi has unit integral; dividing by its quadrature mass makes each arc
  // carry exactly 1/L, so total measure is 1 by construction.
  for (ThetaNode& nd : nodes_) nd.weight /= mass;

  for (const QMember& m : qs.members) {
    L_ += euler_phi(m.q);
    for (u64 a = 1; a <= m.q; ++a) {
      if (std::gcd(a, m.q) == 1) arcs_.push_back({a, m.q});
    }
  }
}

double measure_integrate(const MinorArcMeasure& mu,
                         const std::function<double(double)>& integrand,
                         u64 n) {
  if (n == 0) throw UsageError("measure_integrate: n must be positive");
  const auto& arcs = mu.arcs();
  const auto& nodes = mu.theta_quadrature();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double total = parallel_block_reduce<double>(
      arcs.size(), 256, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
          const double aq = static_cast<double>(arcs[i].a) /
                            static_cast<double>(arcs[i].q);
          double arc = 0.0;
          for (const ThetaNode& nd : nodes) {
            double x = aq - nd.tau * inv_n;
            x -= std::floor(x);
            if (x >= 1.0) x = 0.0;  // floor rounding at the seam
            arc += nd.weight * integrand(x);
          }
          acc += arc;
        }
        return acc;
      },
      [](double a, double b) { return a + b; });
  return total / static_cast<double>(mu.L());
}

double restricted_void(const MinorArcMeasure& mu, const FracSequence& seq,
                       double s) {
  if (!(s > 0.0)) throw UsageError("restricted_void: s must be > 0");
  if (mu.qset().n != seq.n_base) {
    throw UsageError("restricted_void: QSet and sequence built at different N");
  }
  return measure_integrate(
      mu,
      [&seq, s](double x) {
        return count_in_window(seq, x, s) == 0 ? 1.0 : 0.0;
      },
      seq.n_base);
}

namespace {

// Support sequence for the zero test of R: fractional parts of sqrt(n),
// paired with the weight V(n/N), for every n with V(n/N) > 0. Only points
// inside the window (x, x + (s+eta)/N) can contribute to R(x), so R is the
// sum of V(n/N) Phi(N frac(sqrt(n) - x)) over the few points found there.
struct SupportPoint {
  Frac96 value;
  double weight;  // V(n/N)
};

struct SupportSeq {
  std::vector<SupportPoint> points;  // sorted ascending by value

  // R(x) restricted to the open window (x, x + width) mod 1.
  double window_sum(const Bump& big_phi, double n_scale, Frac96 x,
                    Frac96 width) const {
    double total = 0.0;
    const u128 lo = x.raw;
    const auto begin = points.begin(), end = points.end();
    auto it = std::upper_bound(
        begin, end, lo,
        [](u128 key, const SupportPoint& p) { return key < p.value.raw; });
    const u128 span = frac96_one() - lo;
    const auto add = [&](const SupportPoint& p) {
      const double y =
          n_scale * frac96_to_double(frac96_sub_mod1(p.value, x));
      total += p.weight * big_phi.value(y);
    };
    if (width.raw <= span) {  // no wrap: window is (x, x + width)
      for (; it != end && (it->value.raw - lo) < width.raw; ++it) add(*it);
      return total;
    }
    for (; it != end; ++it) add(*it);  // everything above x is inside
    const u128 rest = width.raw - span;  // wrapped part below x + width - 1
    for (it = begin; it != end && it->value.raw < rest; ++it) add(*it);
    return total;
  }
};

SupportSeq build_support(const TestFunctionSet& tf, u64 n) {
  const double nd = static_cast<double>(n);
  u64 n_lo = static_cast<u64>(std::ceil(tf.V.lo * nd));
  u64 n_hi = static_cast<u64>(std::floor(tf.V.hi * nd));
  SupportSeq out;
  out.points.reserve(n_hi - n_lo + 1);
  for (u64 m = n_lo; m <= n_hi; ++m) {
    const double w = tf.V.value(static_cast<double>(m) / nd);
    if (!(w > 0.0)) continue;
    out.points.push_back({frac_sqrt(m), w});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const SupportPoint& a, const SupportPoint& b) {
              return a.value.raw < b.value.raw;
            });
  return out;
}

}  // namespace

double smoothed_void(const MinorArcMeasure& mu, const TestFunctionSet& tf,
                     u64 n) {
  if (static_cast<double>(n) * tf.eta <= 100.0) {
    throw UsageError("smoothed_void: need N > 100 / eta");
  }
  const SupportSeq support = build_support(tf, n);
  // Every term of R outside the window (x, x + (s+eta)/N) vanishes, so the
  // window sum is the full count; the zero test keeps the hard 1e-9
  // threshold of the direct evaluator.
  const double nd = static_cast<double>(n);
  const Frac96 width = frac96_from_double(tf.Phi.hi / nd);
  const Bump& big_phi = tf.Phi;
  return measure_integrate(
      mu,
      [&support, &big_phi, nd, width](double x) {
        return support.window_sum(big_phi, nd, frac96_from_double(x), width) <
                       1e-9
                   ? 1.0
                   : 0.0;
      },
      n);
}

}  // namespace rootgap
