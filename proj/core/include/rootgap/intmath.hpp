#pragma once

// Exact number-theoretic kernel: modular inverses, primality/factorization,
// Euler phi, Moebius, Ramanujan sums, CRT phase splitting. Everything here is
// integer-exact; the only floating point is in callers.

#include <cstdint>
#include <utility>
#include <vector>

namespace rootgap {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Inverse of x modulo m, in [1, m). x may be negative or exceed m.
// Throws NotInvertible when gcd(x, m) > 1 (or m < 2).
u64 mod_inverse(i64 x, u64 m);

// Deterministic Miller–Rabin, valid for all 64-bit n.
bool is_prime(u64 n);

// Prime factorization (trial division + Brent–Pollard rho), sorted by prime.
std::vector<std::pair<u64, int>> factorize(u64 n);

// All divisors, sorted ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
int mobius(u64 n);  // 0 if not squarefree, else (-1)^(number of prime factors)

// Ramanujan sum c_q(l) = sum_{d | gcd(q,l)} mu(q/d) * d
//              = sum over residues (a,q)=1 of e(a l / q).
// c_q(0) = phi(q). Even in l.
i64 ramanujan_sum(u64 q, i64 l);

// Primes in [2, n] (simple sieve) and in [lo, hi] (segmented).
std::vector<u64> primes_up_to(u64 n);
std::vector<u64> primes_in(u64 lo, u64 hi);

// Split of the phase 1/(i*j*h) into residue fractions over the three
// pairwise-coprime moduli:
//   1/(ijh) == inv(jh, i)/i + inv(ih, j)/j + inv(ij, h)/h   (mod 1).
// Components are returned as reduced fractions num/den, 0 <= num < den,
// adjusted for the overall sign of i*j*h. Throws NotCoprime.
struct PhaseSplit {
  i64 num1, den1;
  i64 num2, den2;
  i64 num3, den3;
};
PhaseSplit crt_phase_split(i64 i, i64 j, i64 h);

}  // namespace rootgap
