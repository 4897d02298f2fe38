#include "rootgap/intmath.hpp"

#include <algorithm>
#include <numeric>

#include "rootgap/errors.hpp"

namespace rootgap {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = m > 1 ? 1 % m : 0;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 mod_inverse(i64 x, u64 m) {
  if (m < 2) throw NotInvertible(static_cast<u64>(x < 0 ? -x : x), m);
  i64 mm = static_cast<i64>(m);
  i64 a = x % mm;
  if (a < 0) a += mm;
  if (a == 0) throw NotInvertible(static_cast<u64>(a), m);
  // Extended Euclid on (a, m).
  i64 r0 = a, r1 = mm, s0 = 1, s1 = 0;
  while (r1) {
    i64 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw NotInvertible(x, m);
  s0 %= mm;
  if (s0 < 0) s0 += mm;
  return static_cast<u64>(s0);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for all n < 3.3e24, hence for all u64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  // Brent's cycle variant; n must be odd, composite, not a prime power ruled
  // out by caller loops (any nontrivial factor is acceptable here).
  for (u64 c = 1;; ++c) {
    auto step = [n, c](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      u64 q = 1;
      const u64 batch = 64;
      u64 ys = y;
      for (u64 i = 0; i < batch && lam < power && d == 1; ++i) {
        y = step(y);
        ++lam;
        u64 diff = x > y ? x - y : y - x;
        if (diff == 0) {
          d = 0;  // cycle without factor; restart with next c
          break;
        }
        q = mulmod(q, diff, n);
      }
      if (d == 0) break;
      d = std::gcd(q, n);
      if (d == n) {
        // Backtrack one step at a time.
        d = 1;
        u64 z = ys;
        while (d == 1) {
          z = step(z);
          u64 diff = x > z ? x - z : z - x;
          if (diff == 0) {
            d = 0;
            break;
          }
          d = std::gcd(diff, n);
        }
        if (d == 0) break;
        if (d != n) return d;
        d = 0;
        break;
      }
    }
    if (d > 1 && d < n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  if (n < 2) return out;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    if (p * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.emplace_back(rest[i], static_cast<int>(j - i));
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  if (n == 0) return {};
  for (auto [p, e] : factorize(n)) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

int mobius(u64 n) {
  if (n == 0) return 0;
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

i64 ramanujan_sum(u64 q, i64 l) {
  if (q == 0) return 0;
  u64 al = l < 0 ? static_cast<u64>(-(l + 1)) + 1 : static_cast<u64>(l);
  u64 g = al == 0 ? q : std::gcd(q, al);
  i64 sum = 0;
  for (u64 d : divisors(g)) {
    int mu = mobius(q / d);
    sum += static_cast<i64>(mu) * static_cast<i64>(d);
  }
  return sum;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) {
      comp[j] = true;
      if (j + i < j) break;  // overflow guard
    }
  }
  return out;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || hi < lo) return out;
  if (lo < 2) lo = 2;
  u64 root = 1;
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<u64> small = primes_up_to(root);
  std::vector<bool> comp(hi - lo + 1, false);
  for (u64 p : small) {
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 j = start; j <= hi; j += p) {
      comp[j - lo] = true;
      if (j + p < j) break;
    }
  }
  for (u64 i = lo; i <= hi; ++i) {
    if (!comp[i - lo]) out.push_back(i);
    if (i == hi) break;
  }
  return out;
}

namespace {

// Reduce num/den (den > 0) to lowest terms with 0 <= num < den.
void reduce_mod1(i64& num, i64& den) {
  num %= den;
  if (num < 0) num += den;
  i64 g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

}  // namespace

PhaseSplit crt_phase_split(i64 i, i64 j, i64 h) {
  if (i == 0 || j == 0 || h == 0) {
    throw UsageError("crt_phase_split: moduli must be nonzero");
  }
  i64 ai = i < 0 ? -i : i, aj = j < 0 ? -j : j, ah = h < 0 ? -h : h;
  if (std::gcd(ai, aj) != 1) throw NotCoprime(ai, aj);
  if (std::gcd(ai, ah) != 1) throw NotCoprime(ai, ah);
  if (std::gcd(aj, ah) != 1) throw NotCoprime(aj, ah);
  bool negative = ((i < 0) ^ (j < 0) ^ (h < 0));

  auto component = [negative](i64 other1, i64 other2, i64 m) -> std::pair<i64, i64> {
    if (m == 1) return {0, 1};
    u64 um = static_cast<u64>(m);
    // inv((other1*other2) mod m, m); reduce factors first to avoid overflow.
    i64 r1 = other1 % m, r2 = other2 % m;
    if (r1 < 0) r1 += m;
    if (r2 < 0) r2 += m;
    u64 prod = mulmod(static_cast<u64>(r1), static_cast<u64>(r2), um);
    i64 num = static_cast<i64>(mod_inverse(static_cast<i64>(prod), um));
    i64 den = m;
    if (negative) num = den - num;  // e(-a/m) = e((m-a)/m)
    reduce_mod1(num, den);
    return {num, den};
  };

  auto [n1, d1] = component(aj, ah, ai);
  auto [n2, d2] = component(ai, ah, aj);
  auto [n3, d3] = component(ai, aj, ah);
  return PhaseSplit{n1, d1, n2, d2, n3, d3};
}

}  // namespace rootgap
