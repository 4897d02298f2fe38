#include "rootgap/rtilde.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "rootgap/errors.hpp"
#include "rootgap/parallel.hpp"
#include "rootgap/rdirect.hpp"

namespace rootgap {

double r_tilde(FareyPoint fp, const FKernel& k, u64 n, double delta,
               i64 v_cap) {
  if (fp.q % 2 == 0) throw UsageError("r_tilde: q must be odd");
  if (n < 100) throw UsageError("r_tilde: n must be at least 100");
  const std::vector<LatticePair> bset = enumerate_bset(fp, delta, v_cap);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double qd = static_cast<double>(fp.q);
  std::complex<double> acc = 0.0;
  for (const LatticePair& t : bset) {
    const u64 av = static_cast<u64>(t.v < 0 ? -t.v : t.v);
    const u64 m = 4 * av;
    const u64 qbar = mod_inverse(static_cast<i64>(fp.q % m), m);
    const u64 u2 = static_cast<u64>(t.u * t.u);
    // e(-qbar^2 u^2 / 4v): reduce mod 4|v| exactly, then attach sign(v).
    const u64 r = mulmod(mulmod(qbar, qbar, m), u2 % m, m);
    const double sign_v = t.v > 0 ? 1.0 : -1.0;
    const double phase = -sign_v * static_cast<double>(r) /
                             static_cast<double>(m) +
                         static_cast<double>(u2) /
                             (4.0 * static_cast<double>(t.v) * qd * qd);
    // Kernel slots (xi, eta) = (v / sqrt(N), 2u sqrt(N) / q).  The factor 2
    // in eta comes from the even-u change of variable in the Gauss-sum step:
    // the integral identity fixes eta = u_old sqrt(N)/q and u_old = 2u.
    acc += expi2pi(phase) * k.eval(static_cast<double>(t.v) / sqrt_n,
                                   2.0 * static_cast<double>(t.u) * sqrt_n / qd);
  }
  if (std::fabs(acc.imag()) > 1e-6) {
    throw SymmetryViolation("r_tilde: sum failed to be real", acc.imag());
  }
  return acc.real();
}

namespace {

i64 default_v_cap(double delta, u64 n) {
  return static_cast<i64>(std::ceil(delta * std::sqrt(static_cast<double>(n))));
}

Frac96 arc_point(FareyPoint fp, double theta) {
  return frac96_sub_mod1(frac96_from_rational(fp.a % fp.q, fp.q),
                         frac96_from_double(theta));
}

double kernel_xi_max(const TestFunctionSet& tf, i64 v_cap, u64 n) {
  const double xi = static_cast<double>(v_cap) /
                    std::sqrt(static_cast<double>(n));
  return std::max(8.0, 2.0 * xi * std::sqrt(tf.V.hi) + 1.0);
}

}  // namespace

double prop3_residual(FareyPoint fp, const TestFunctionSet& tf, u64 n,
                      double theta, double delta, i64 v_cap,
                      std::shared_ptr<const FourierTable> phi_table) {
  const double n_theta = static_cast<double>(n) * theta;
  if (!(std::fabs(n_theta) <= 0.01 + 1e-12)) {
    throw UsageError("prop3_residual: need |N theta| <= 1/100");
  }
  if (v_cap <= 0) v_cap = default_v_cap(delta, n);
  FKernel k(tf, n_theta, FQuadrature{}, std::move(phi_table),
            kernel_xi_max(tf, v_cap, n));
  const double rt = r_tilde(fp, k, n, delta, v_cap);
  const double rd = r_direct(n, tf, arc_point(fp, theta));
  // Same association as prop3_sweep so the two paths agree bit-for-bit.
  const double r_formula = tf.Phi.integral() * tf.V.integral() + 2.0 * rt;
  return std::fabs(rd - r_formula);
}

std::vector<Prop3Row> prop3_sweep(const QSet& qs, const TestFunctionSet& tf,
                                  u64 n, double theta, i64 v_cap,
                                  std::size_t min_arcs) {
  if (qs.members.empty()) throw UsageError("prop3_sweep: empty QSet");
  if (min_arcs == 0) throw UsageError("prop3_sweep: min_arcs must be >= 1");
  const double n_theta = static_cast<double>(n) * theta;
  if (!(std::fabs(n_theta) <= 0.01 + 1e-12)) {
    throw UsageError("prop3_sweep: need |N theta| <= 1/100");
  }
  if (v_cap <= 0) v_cap = default_v_cap(qs.delta, n);

  // One (q, a) row per member per pass, a = pass-th coprime residue.
  std::vector<FareyPoint> arcs;
  std::vector<u64> next_a(qs.members.size(), 1);
  while (arcs.size() < min_arcs) {
    bool grew = false;
    for (std::size_t i = 0; i < qs.members.size(); ++i) {
      u64 a = next_a[i];
      const u64 q = qs.members[i].q;
      while (a < q && std::gcd(a, q) != 1) ++a;
      if (a >= q) continue;
      arcs.push_back({a, q});
      next_a[i] = a + 1;
      grew = true;
    }
    if (!grew) break;  // every member exhausted its residues
  }

  auto table = make_phi_table(tf, kernel_xi_max(tf, v_cap, n));
  const FKernel k(tf, n_theta, FQuadrature{}, table);
  const double main_term = tf.Phi.integral() * tf.V.integral();
  std::vector<Prop3Row> rows(arcs.size());
  parallel_for(arcs.size(), [&](std::size_t i) {
    const FareyPoint fp = arcs[i];
    const double rt = r_tilde(fp, k, n, qs.delta, v_cap);
    const double rd = r_direct(n, tf, arc_point(fp, theta));
    Prop3Row& row = rows[i];
    row.q = fp.q;
    row.a = fp.a;
    row.theta = theta;
    row.r_direct = rd;
    row.r_formula = main_term + 2.0 * rt;
    row.residual = std::fabs(rd - row.r_formula);
  });
  return rows;
}

}  // namespace rootgap
