#include "rootgap/jutila.hpp"

#include <cmath>

#include "rootgap/constants.hpp"
#include "rootgap/errors.hpp"
#include "rootgap/fourier.hpp"
#include "rootgap/parallel.hpp"

namespace rootgap {

namespace {

// Precomputed divisor data for one member: (d, mu(q/d)) over all d | q.
struct MemberDivisors {
  std::vector<u64> d;
  std::vector<int> mu_cofactor;
  u64 sigma = 0;  // sum of divisors, bounds |c_q(l)|
};

}  // namespace

JutilaL2 jutila_l2(const MinorArcMeasure& mu, u64 n, u64 max_ell) {
  const QSet& qs = mu.qset();
  if (n != qs.n) {
    throw UsageError("jutila_l2: n must match the QSet's N");
  }
  if (max_ell < n) throw UsageError("jutila_l2: need max_ell >= n");

  std::vector<MemberDivisors> members;
  members.reserve(qs.members.size());
  double sigma_sum = 0.0;
  for (const QMember& m : qs.members) {
    MemberDivisors md;
    md.d = divisors(m.q);
    for (u64 d : md.d) {
      md.mu_cofactor.push_back(mobius(m.q / d));
      md.sigma += d;
    }
    sigma_sum += static_cast<double>(md.sigma);
    members.push_back(std::move(md));
  }

  const Bump& phi = mu.test_functions().phi;
  const double nd = static_cast<double>(n);
  const FourierTable phi_hat(phi, static_cast<double>(max_ell) / nd + 1.0,
                             1e-10);

  // Head: 2 * sum_{l=1}^{max_ell} |phihat(l/N)|^2 S(l)^2 / L^2.
  const double head_sum = parallel_block_reduce<double>(
      max_ell, 8192, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t l = lo; l < hi; ++l) {
          const u64 ell = static_cast<u64>(l) + 1;
          double s = 0.0;
          for (const MemberDivisors& md : members) {
            for (std::size_t i = 0; i < md.d.size(); ++i) {
              if (ell % md.d[i] == 0) {
                s += static_cast<double>(md.mu_cofactor[i]) *
                     static_cast<double>(md.d[i]);
              }
            }
          }
          const double ph = std::abs(phi_hat(static_cast<double>(ell) / nd));
          acc += ph * ph * s * s;
        }
        return acc;
      },
      [](double a, double b) { return a + b; });
  const double big_l = static_cast<double>(mu.L());

  JutilaL2 out;
  out.max_ell = max_ell;
  out.lhs = 2.0 * head_sum / (big_l * big_l);

  // Tail: |phihat(l/N)| <= ||phi''||_1 (N / 2 pi l)^2 and |S| <= sigma_sum,
  // so the dropped part is at most
  //   (2 / L^2) sigma_sum^2 (||phi''||_1 N^2 / (2 pi)^2)^2 / (3 max_ell^3).
  const double c2 = phi.second_derivative_l1() * nd * nd /
                    (kTwoPi * kTwoPi);
  out.tail_bound = 2.0 * sigma_sum * sigma_sum * c2 * c2 /
                   (3.0 * std::pow(static_cast<double>(max_ell), 3)) /
                   (big_l * big_l);
  if (out.tail_bound > 0.1 * out.lhs) {
    throw TruncationTooCoarse("jutila_l2", out.tail_bound, out.lhs);
  }

  const double q_scale = qs.q_scale;
  out.bound = std::pow(q_scale, 4) / (qs.delta * qs.delta * big_l * big_l) +
              std::pow(q_scale, 2.1) / (big_l * big_l);
  return out;
}

}  // namespace rootgap
