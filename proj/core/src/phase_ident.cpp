#include "rootgap/phase_ident.hpp"

#include <cstdlib>
#include <numeric>

#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational requires a positive denominator; fold the sign into num.
Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Reduces r into [0, 1).
Rational frac_part(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);  // den > 0
  BigInt whole = num / den;
  if (num < 0 && whole * den != num) --whole;
  return r - Rational(whole);
}

}  // namespace

Rational phase_reduction_check(i64 q, const std::vector<i64>& u,
                               const std::vector<i64>& v) {
  if (q < 3 || q % 2 == 0) {
    throw UsageError("phase_reduction_check: q must be odd and at least 3");
  }
  if (q >= (i64(1) << 31)) {
    throw UsageError("phase_reduction_check: q too large (q^2 must fit)");
  }
  if (u.empty() || u.size() != v.size()) {
    throw UsageError("phase_reduction_check: u and v must be nonempty, equal-length");
  }
  const std::size_t k = u.size();
  const u64 qq = static_cast<u64>(q) * static_cast<u64>(q);

  // Hypotheses: v_i nonzero, gcd(4 u_i v_i, q) = 1 (q odd handles the 4),
  // and q | u1 v_i - u_i v1.
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i] == 0 || u[i] == 0 ||
        std::gcd(std::abs(u[i]), q) != 1 || std::gcd(std::abs(v[i]), q) != 1) {
      throw HypothesisFailed("phase_reduction_check: gcd(4 u v, q) > 1 or zero term",
                             static_cast<int>(i + 1));
    }
    const i128 cross = i128(u[0]) * v[i] - i128(u[i]) * v[0];
    if (cross % q != 0) {
      throw HypothesisFailed("phase_reduction_check: u1 v_i - u_i v1 not divisible by q",
                             static_cast<int>(i + 1));
    }
  }

  Rational lhs = 0, tail = 0;
  BigInt u_sum = 0, l_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const u64 m = 4 * static_cast<u64>(std::abs(v[i]));
    const BigInt qbar = mod_inverse(q, m);
    const BigInt usq = BigInt(u[i]) * u[i];
    lhs += make_rational(qbar * qbar * usq, BigInt(4) * v[i]);
    tail += make_rational(usq, BigInt(4) * v[i] * qq);
    u_sum += u[i];
    l_sum += (BigInt(u[0]) * v[i] - BigInt(u[i]) * v[0]) / q;
  }

  const i64 v1_mod_qq = static_cast<i64>((i128(4) * v[0]) % static_cast<i64>(qq));
  const u64 inv_4v1_qq = mod_inverse(v1_mod_qq, qq);
  const i64 v1sq_mod_q = static_cast<i64>(i128(v[0]) * v[0] % q);
  const u64 inv_4v1sq_q = mod_inverse(4 * v1sq_mod_q % q, static_cast<u64>(q));

  const Rational rhs = Rational(BigInt(-u[0]) * inv_4v1_qq * u_sum, BigInt(qq)) +
                       Rational(BigInt(u[0]) * inv_4v1sq_q * l_sum, BigInt(q)) +
                       tail;
  return frac_part(lhs - rhs);
}

PhaseTuple random_phase_tuple(Rng& rng, int k, i64 q_max) {
  if (k < 1) throw UsageError("random_phase_tuple: k must be at least 1");
  if (q_max < 3) throw UsageError("random_phase_tuple: q_max must be at least 3");

  PhaseTuple t;
  const u64 odd_count = static_cast<u64>((q_max - 3) / 2 + 1);
  t.q = 3 + 2 * static_cast<i64>(rng.next_below(odd_count));

  const auto draw_coprime = [&](i64 bound) {
    while (true) {
      const i64 x = static_cast<i64>(rng.next_below(2 * static_cast<u64>(bound) + 1)) - bound;
      if (x != 0 && std::gcd(std::abs(x), t.q) == 1) return x;
    }
  };

  t.u.push_back(draw_coprime(30));
  t.v.push_back(draw_coprime(30));
  const u64 u1_inv = mod_inverse(t.u[0], static_cast<u64>(t.q));
  for (int i = 1; i < k; ++i) {
    const i64 ui = draw_coprime(30);
    // v_i must satisfy u1 v_i == u_i v1 (mod q); shift by a random multiple
    // of q so both signs occur.
    const u64 uv_mod = static_cast<u64>(((i128(ui) * t.v[0]) % t.q + t.q) % t.q);
    const i64 r = static_cast<i64>(mulmod(uv_mod, u1_inv, static_cast<u64>(t.q)));
    const i64 shift = static_cast<i64>(rng.next_below(3)) - 1;  // -1, 0, 1
    i64 vi = r + shift * t.q;
    if (vi == 0) vi = r;  // r in [1,q) so this is nonzero
    t.u.push_back(ui);
    t.v.push_back(vi);
  }
  return t;
}

}  // namespace rootgap
