#include "rootgap/qset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

void append_desk_members(double q_lo, double q_hi, u64 prime_floor,
                         double a_band_lo, double a_band_hi,
                         std::vector<QMember>* members) {
  const u64 a_lo = static_cast<u64>(std::ceil(std::max(a_band_lo, 2.0)));
  const u64 a_hi = static_cast<u64>(std::floor(a_band_hi));
  if (a_hi < a_lo) return;
  for (u64 a : primes_in(a_lo, a_hi)) {
    if (a <= prime_floor) continue;
    const u64 b_lo = static_cast<u64>(std::ceil(q_lo / static_cast<double>(a)));
    const u64 b_hi = static_cast<u64>(std::floor(q_hi / static_cast<double>(a)));
    if (b_hi < b_lo) continue;
    for (u64 b : primes_in(std::max<u64>(b_lo, 2), b_hi)) {
      if (b <= prime_floor || b == a) continue;
      const u64 q = a * b;
      const double qd = static_cast<double>(q);
      if (qd < q_lo || qd > q_hi) continue;
      members->push_back({q, a, b});
    }
  }
}

void append_paper_members(double q_lo, double q_hi, double delta,
                          std::vector<QMember>* members) {
  // Every prime factor of q must exceed delta^2001; since q <= q_hi, the
  // family is certainly empty once 2001*log(delta) >= log(q_hi).
  const double log_threshold = 2001.0 * std::log(delta);
  if (log_threshold >= std::log(q_hi)) return;
  if (q_hi > 1e8) {
    throw UsageError("build_qset: paper-mode enumeration range too large");
  }
  const double band_lo = std::pow(q_lo, 1.0 / 1000.0);
  const double band_hi = 2.0 * band_lo;
  const u64 first = static_cast<u64>(std::ceil(std::max(q_lo, 2.0)));
  const u64 last = static_cast<u64>(std::floor(q_hi));
  for (u64 q = first; q <= last; ++q) {
    const auto factors = factorize(q);
    bool ok = true;
    for (const auto& [p, e] : factors) {
      if (e > 1) ok = false;  // not squarefree
      if (std::log(static_cast<double>(p)) <= log_threshold) ok = false;
    }
    if (!ok) continue;
    for (u64 a : divisors(q)) {
      const double ad = static_cast<double>(a);
      if (ad < band_lo || ad > band_hi || a == 0) continue;
      members->push_back({q, a, q / a});
      break;  // one split per q; smallest admissible a_factor
    }
  }
}

}  // namespace

QSet build_qset(double delta, u64 n, QSetMode mode, u64 prime_floor,
                double a_band_lo, double a_band_hi) {
  if (!(delta > 0.0)) throw UsageError("build_qset: delta must be positive");
  if (n < 100) throw UsageError("build_qset: n must be at least 100");
  if (mode == QSetMode::kDeskPrimePair) {
    if (prime_floor < 3) {
      throw UsageError("build_qset: desk mode requires prime_floor >= 3");
    }
    if (!(a_band_lo <= a_band_hi)) {
      throw UsageError("build_qset: a-band bounds out of order");
    }
  }

  QSet qs;
  qs.delta = delta;
  qs.n = n;
  qs.q_scale = delta * std::sqrt(static_cast<double>(n));
  qs.mode = mode;
  qs.prime_floor = prime_floor;
  qs.a_band_lo = a_band_lo;
  qs.a_band_hi = a_band_hi;

  const double q_lo = qs.q_scale;
  const double q_hi = 2.0 * qs.q_scale;
  if (mode == QSetMode::kDeskPrimePair) {
    append_desk_members(q_lo, q_hi, prime_floor, a_band_lo, a_band_hi,
                        &qs.members);
  } else {
    append_paper_members(q_lo, q_hi, delta, &qs.members);
  }

  // Canonical order: ascending q, ties by a_factor; one member per q.
  std::sort(qs.members.begin(), qs.members.end(),
            [](const QMember& x, const QMember& y) {
              return x.q != y.q ? x.q < y.q : x.a_factor < y.a_factor;
            });
  qs.members.erase(std::unique(qs.members.begin(), qs.members.end(),
                               [](const QMember& x, const QMember& y) {
                                 return x.q == y.q;
                               }),
                   qs.members.end());

  if (qs.members.empty()) throw EmptyQSet("build_qset: no admissible moduli");
  return qs;
}

PhiStats qset_phi_stats(const QSet& qs, double epsilon) {
  if (qs.members.empty()) throw UsageError("qset_phi_stats: empty QSet");
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw UsageError("qset_phi_stats: epsilon must lie in (0,1]");
  }
  PhiStats st;
  const double window_hi = (1.0 + epsilon) * qs.q_scale;
  double full_sum = 0.0;
  for (const QMember& m : qs.members) {
    const double ratio = static_cast<double>(euler_phi(m.q)) /
                         static_cast<double>(m.q);
    full_sum += ratio;
    if (static_cast<double>(m.q) <= window_hi) st.window_sum += ratio;
    st.phi_total += static_cast<double>(euler_phi(m.q));
  }
  st.scaled_full_sum = epsilon * full_sum;
  st.lemma_estimate = 1.5 * qs.q_scale * full_sum;
  const auto rel = [](double x, double y) {
    const double scale = std::max(std::abs(y), 1e-300);
    return std::abs(x - y) / scale;
  };
  st.dev_window = rel(st.window_sum, st.scaled_full_sum);
  st.dev_total = rel(st.phi_total, st.lemma_estimate);
  return st;
}

const char* qset_mode_name(QSetMode mode) {
  return mode == QSetMode::kPaper ? "paper" : "desk-prime-pair";
}

std::string qset_to_json(const QSet& qs) {
  nlohmann::ordered_json j;
  j["delta"] = qs.delta;
  j["n"] = qs.n;
  j["mode"] = qset_mode_name(qs.mode);
  j["prime_floor"] = qs.prime_floor;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const QMember& m : qs.members) {
    members.push_back({m.q, m.a_factor, m.b_factor});
  }
  j["members"] = std::move(members);
  return j.dump();
}

}  // namespace rootgap
