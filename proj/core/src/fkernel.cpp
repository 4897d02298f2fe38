#include "rootgap/fkernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <tuple>

#include "rootgap/constants.hpp"
#include "rootgap/errors.hpp"
#include "rootgap/quadrature.hpp"

namespace rootgap {

namespace {

double sinc(double t) {
  const double a = kPi * t;
  if (std::fabs(a) < 1e-8) return 1.0 - a * a / 6.0;
  return std::sin(a) / a;
}

std::size_t osc_cells(double len, double rate, std::size_t cap) {
  const double want = std::ceil(len * rate) + 1.0;
  if (want >= static_cast<double>(cap)) return cap;
  return std::max<std::size_t>(1, static_cast<std::size_t>(want));
}

// ---------------------------------------------------------------------------
// Fresnel side: uniform table of p(xi) = 2 Re fhat(xi) on [0, xi_built].
//
// The plateau piece of fhat is closed-form; each ramp contributes
// sum_i c_i cos(2 pi xi y_i) over fixed composite Gauss nodes, advanced across
// the uniform grid by complex phasor recurrences (restarted exactly at every
// block boundary and every kRenorm steps, so drift stays ~1e-12). Blocks are
// kBlock wide in xi; per-block sups feed the integration-stage tail test.
// ---------------------------------------------------------------------------

constexpr double kBlock = 64.0;
constexpr double kXiHard = 6000.0;
constexpr double kInterpTol = 1e-10;
constexpr std::size_t kRenorm = 16384;

struct RealTransformTable {
  double h = 0.0;
  double xi_built = 0.0;
  double sup_all = 0.0;
  std::vector<double> val;        // p(j h), j >= 0
  std::vector<double> block_sup;  // sup |p| over [b kBlock, (b+1) kBlock)

  double operator()(double xi) const {
    const double axi = std::fabs(xi);  // p is even
    long j = static_cast<long>(std::floor(axi / h));
    const long last = static_cast<long>(val.size()) - 1;
    if (j > last - 2) j = last - 2;
    if (j < 0) j = 0;
    auto fetch = [this](long k) {
      return val[static_cast<std::size_t>(k >= 0 ? k : -k)];
    };
    const double u = axi / h - static_cast<double>(j);
    const double um1 = u + 1.0, u0 = u, u1 = u - 1.0, u2 = u - 2.0;
    return fetch(j - 1) * (u0 * u1 * u2 / -6.0) +
           fetch(j) * (um1 * u1 * u2 / 2.0) +
           fetch(j + 1) * (um1 * u0 * u2 / -2.0) +
           fetch(j + 2) * (um1 * u0 * u1 / 6.0);
  }
};

struct RampNodes {
  std::vector<double> y;
  std::vector<double> c;  // Gauss weight times f(y)
};

RampNodes ramp_nodes(const Bump& f, double a, double b, double xi_hi) {
  RampNodes out;
  const double len = b - a;
  if (!(len > 0.0)) return out;
  // GL-32 per panel handles <= ~9 oscillation cycles to ~1e-12 relative.
  const int panels =
      std::max(1, static_cast<int>(std::ceil(xi_hi * len / 9.0)));
  const GaussRule& rule = gauss_legendre(32);
  out.y.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
  out.c.reserve(out.y.capacity());
  for (int p = 0; p < panels; ++p) {
    const double pa = a + len * p / panels, pb = a + len * (p + 1) / panels;
    const double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double y = mid + half * rule.nodes[i];
      out.y.push_back(y);
      out.c.push_back(half * rule.weights[i] * f.value(y));
    }
  }
  return out;
}

std::shared_ptr<const RealTransformTable> build_real_transform(const Bump& f) {
  auto table = std::make_shared<RealTransformTable>();
  // Grid step from the cubic-interpolation bound, |p''''| <= 2 (2 pi Y)^4 ||f||_1.
  const double y_sup = std::max(f.sup_abs_coordinate(), 1e-3);
  const double m4 = 2.0 * std::pow(kTwoPi * y_sup, 4) * f.integral();
  table->h = std::min(std::pow(kInterpTol / (0.024 * m4), 0.25), 0.05);

  const double plat_len = f.phi - f.plo;
  const double plat_mid = 0.5 * (f.plo + f.phi);
  const double stop_tol = 1e-11 * std::max(1.0, 2.0 * f.integral());

  const std::size_t steps_per_block =
      static_cast<std::size_t>(std::ceil(kBlock / table->h));
  const std::size_t max_blocks = static_cast<std::size_t>(kXiHard / kBlock);
  table->val.reserve(steps_per_block * 8);

  std::size_t quiet_blocks = 0;
  for (std::size_t b = 0; b < max_blocks; ++b) {
    const double xi_hi = (b + 1) * kBlock;
    RampNodes ramps[2] = {ramp_nodes(f, f.lo, f.plo, xi_hi),
                          ramp_nodes(f, f.phi, f.hi, xi_hi)};
    const std::size_t j0 = b * steps_per_block;
    const std::size_t j1 = j0 + steps_per_block;
    std::vector<std::complex<double>> z[2], m[2];
    for (int r = 0; r < 2; ++r) {
      const auto& rn = ramps[r];
      z[r].resize(rn.y.size());
      m[r].resize(rn.y.size());
      for (std::size_t i = 0; i < rn.y.size(); ++i) {
        m[r][i] = expi2pi(-table->h * rn.y[i]);
      }
    }
    double bsup = 0.0;
    table->val.resize(j1);
    for (std::size_t j = j0; j < j1; ++j) {
      const double xi = j * table->h;
      if ((j - j0) % kRenorm == 0) {
        for (int r = 0; r < 2; ++r) {
          for (std::size_t i = 0; i < ramps[r].y.size(); ++i) {
            z[r][i] = expi2pi(-xi * ramps[r].y[i]);
          }
        }
      }
      double re = f.amplitude * plat_len * sinc(xi * plat_len) *
                  std::cos(kTwoPi * xi * plat_mid);
      for (int r = 0; r < 2; ++r) {
        const auto& rn = ramps[r];
        for (std::size_t i = 0; i < rn.y.size(); ++i) {
          re += rn.c[i] * z[r][i].real();
          z[r][i] *= m[r][i];
        }
      }
      const double p = 2.0 * re;
      table->val[j] = p;
      bsup = std::max(bsup, std::fabs(p));
    }
    table->block_sup.push_back(bsup);
    table->sup_all = std::max(table->sup_all, bsup);
    table->xi_built = xi_hi;
    quiet_blocks = bsup < stop_tol ? quiet_blocks + 1 : 0;
    if (quiet_blocks >= 2 && b >= 3) break;
  }
  // Interpolation near the top edge needs two extra nodes.
  table->val.push_back(0.0);
  table->val.push_back(0.0);
  return table;
}

std::shared_ptr<const RealTransformTable> real_transform_for(const Bump& f) {
  using Key = std::tuple<double, double, double, double, double>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const RealTransformTable>> cache;
  const Key key{f.lo, f.plo, f.phi, f.hi, f.amplitude};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = build_real_transform(f);
  cache.emplace(key, table);
  return table;
}

}  // namespace

FKernel::FKernel(const TestFunctionSet& tf, double theta,
                 FQuadrature quadrature,
                 std::shared_ptr<const FourierTable> phi_table,
                 double phi_xi_max)
    : tf_(&tf), theta_(theta), quad_(quadrature), phi_table_(std::move(phi_table)) {
  if (!std::isfinite(theta)) throw UsageError("FKernel: theta must be finite");
  if (!(quad_.target_abs_err >= 1e-12)) {
    throw UsageError("FKernel: target_abs_err must be >= 1e-12");
  }
  if (quad_.max_panels < 16) {
    throw UsageError("FKernel: max_panels must be >= 16");
  }
  if (tf.V.lo < 0.0) {
    throw UsageError("FKernel: V must be supported in the positive axis");
  }
  x_break_[0] = std::sqrt(tf.V.lo);
  x_break_[1] = std::sqrt(tf.V.plo);
  x_break_[2] = std::sqrt(tf.V.phi);
  x_break_[3] = std::sqrt(tf.V.hi);
  if (quad_.memoize_phi_hat && !phi_table_) {
    if (!(phi_xi_max > 0.0)) {
      throw UsageError("FKernel: phi_xi_max must be > 0");
    }
    phi_table_ = make_phi_table(tf, phi_xi_max);
  }
}

std::shared_ptr<const FourierTable> make_phi_table(const TestFunctionSet& tf,
                                                   double xi_max,
                                                   double interp_tol) {
  return std::make_shared<FourierTable>(tf.Phi, xi_max, interp_tol, 1e-12);
}

std::complex<double> FKernel::phi_hat(double arg) const {
  if (phi_table_ && std::fabs(arg) <= phi_table_->xi_max()) {
    return (*phi_table_)(arg);
  }
  return fourier_transform(tf_->Phi, arg, 1e-12);
}

std::complex<double> FKernel::eval(double xi, double eta) const {
  // Linear phase e((2 xi theta - eta/2) x); Phihat(2 xi x) itself oscillates
  // like e(-2 xi x * center(Phi)), so both rates size the initial panels.
  const double c = 2.0 * xi * theta_ - 0.5 * eta;
  const double phi_center = 0.5 * (tf_->Phi.plo + tf_->Phi.phi);
  const double rate = std::fabs(c) + 2.0 * std::fabs(xi) * phi_center;
  const Bump& v = tf_->V;
  auto integrand = [this, xi, c, &v](double x) {
    return phi_hat(2.0 * xi * x) * expi2pi(c * x) * x * v.value(x * x);
  };
  std::complex<double> acc = 0.0;
  for (int piece = 0; piece < 3; ++piece) {
    const double a = x_break_[piece], b = x_break_[piece + 1];
    if (!(b > a)) continue;
    acc += integrate_adaptive(integrand, a, b, quad_.target_abs_err / 3.0,
                              quad_.max_panels,
                              osc_cells(b - a, rate, quad_.max_panels / 2))
               .value;
  }
  return acc;
}

double FKernel::trivial_bound() const {
  return tf_->Phi.integral() * 0.5 * tf_->V.integral();
}

std::complex<double> f_eval(const FKernel& k, double xi, double eta) {
  return k.eval(xi, eta);
}

std::pair<std::complex<double>, std::complex<double>> fresnel_identity_check(
    double v, const Bump& f) {
  if (v == 0.0 || !std::isfinite(v)) {
    throw UsageError("fresnel_identity_check: v must be nonzero and finite");
  }
  const double av = std::fabs(v);

  // LHS: int e(-v y^2) f(y) dy piece by piece over the bump's breakpoints.
  std::complex<double> lhs = 0.0;
  const double breaks[4] = {f.lo, f.plo, f.phi, f.hi};
  auto lhs_integrand = [v, &f](double y) {
    return f.value(y) * expi2pi(-v * y * y);
  };
  for (int piece = 0; piece < 3; ++piece) {
    const double a = breaks[piece], b = breaks[piece + 1];
    if (!(b > a)) continue;
    const double cycles = av * std::fabs(b * b - a * a);
    lhs += integrate_adaptive(lhs_integrand, a, b, 3e-10, 60000,
                              osc_cells(1.0, 2.0 * cycles + 2.0, 30000))
               .value;
  }

  // RHS: e(-sgn(v)/8)/sqrt(2|v|) int_R e(xi^2/4v) fhat(xi) dxi. For real f
  // the integrand folds to e(xi^2/4v) * p(xi) on [0, inf), p = 2 Re fhat.
  auto table = real_transform_for(f);
  const RealTransformTable& t = *table;
  const double rf = std::max(std::fabs(f.lo), std::fabs(f.hi));
  std::complex<double> integral = 0.0;
  std::size_t cells_spent = 0;
  const std::size_t cell_budget = 8'000'000;
  for (std::size_t b = 0; b < t.block_sup.size(); ++b) {
    const double b0 = b * kBlock;
    const double b1 = std::min(b0 + kBlock, t.xi_built);
    const double sup = t.block_sup[b];
    if (sup * (b1 - b0) < 1e-12) continue;
    // Past the stationary band xi ~ 4|v| y the combined phase has derivative
    // >= b0/(4|v|) - rf cycles per unit, so the block contributes O(sup/rate)
    // (first-derivative test); drop it once that bound is negligible.
    const double rate_min = b0 / (4.0 * av) - rf;
    if (rate_min > 0.5 && 1.5 * sup / rate_min < 1e-10) continue;
    const double dphi = (b1 * b1 - b0 * b0) / (4.0 * av);
    const double want = std::ceil(1.3 * dphi + 2.0 * rf * (b1 - b0)) + 4.0;
    const std::size_t n =
        static_cast<std::size_t>(std::min(want, 4'000'000.0));
    cells_spent += n;
    if (cells_spent > cell_budget) {
      throw QuadratureBudget(1e-7, sup);
    }
    const double w = (b1 - b0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double ca = b0 + w * i, cb = ca + w;
      integral += gk15(
                      [&t, v](double xi) {
                        return t(xi) * expi2pi(xi * xi / (4.0 * v));
                      },
                      ca, cb)
                      .value;
    }
  }
  const std::complex<double> pref =
      expi2pi(v > 0 ? -0.125 : 0.125) / std::sqrt(2.0 * av);
  return {lhs, pref * integral};
}

DecayProbeReport decay_probe(const FKernel& k, ProbeAxis axis, int order,
                             const std::vector<double>& grid,
                             double other_coord) {
  if (order < 0 || order > 8) {
    throw UsageError("decay_probe: order must be in [0, 8]");
  }
  if (grid.empty()) throw UsageError("decay_probe: empty grid");
  DecayProbeReport rep;
  rep.axis = axis;
  rep.order = order;
  rep.theta = k.theta();
  rep.other_coord = other_coord;
  const double denom = 1.0 + std::pow(std::fabs(k.theta()), order);
  for (double coord : grid) {
    double xi, eta;
    if (axis == ProbeAxis::kXi) {
      xi = coord;
      eta = other_coord;
    } else {
      xi = other_coord;
      eta = coord;
      if (!(std::fabs(eta) > 50.0 * std::fabs(xi * k.theta()))) {
        ++rep.n_excluded;
        continue;
      }
    }
    const double abs_f = std::abs(k.eval(xi, eta));
    const double ratio =
        abs_f * (1.0 + std::pow(std::fabs(coord), order)) / denom;
    rep.points.push_back({coord, abs_f, ratio});
    ++rep.n_included;
    if (ratio > rep.sup_ratio) {
      rep.sup_ratio = ratio;
      rep.argmax = coord;
    }
  }
  return rep;
}

std::string decay_probe_to_csv(const DecayProbeReport& rep) {
  std::string out = "axis,order,theta,other_coord,coord,abs_f,ratio\n";
  const char* axis = rep.axis == ProbeAxis::kXi ? "xi" : "eta";
  char line[256];
  for (const ProbePoint& p : rep.points) {
    std::snprintf(line, sizeof(line), "%s,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  axis, rep.order, rep.theta, rep.other_coord, p.coord, p.abs_f,
                  p.ratio);
    out += line;
  }
  return out;
}

std::complex<double> w_hat(const TestFunctionSet& tf, double xi) {
  const Bump& v = tf.V;
  if (v.lo < 0.0) {
    throw UsageError("w_hat: V must be supported in the positive axis");
  }
  const double breaks[4] = {std::sqrt(v.lo), std::sqrt(v.plo),
                            std::sqrt(v.phi), std::sqrt(v.hi)};
  auto integrand = [xi, &v](double y) {
    return y * v.value(y * y) * expi2pi(-xi * y);
  };
  std::complex<double> acc = 0.0;
  for (int piece = 0; piece < 3; ++piece) {
    const double a = breaks[piece], b = breaks[piece + 1];
    if (!(b > a)) continue;
    acc += integrate_adaptive(integrand, a, b, 1e-9 / 3.0, 40000,
                              osc_cells(b - a, std::fabs(xi), 20000))
               .value;
  }
  return acc;
}

}  // namespace rootgap
