#pragma once

// The closed-formula side of the arc decomposition:
//
//   rtilde(a/q - theta; N) = sum_{(u,v) in B, |v| <= v_cap}
//       e( -qbar^2 u^2 / 4v + u^2 / (4 v q^2) ) * F(v / sqrt(N), 2u sqrt(N) / q),
//
// with qbar the inverse of q mod 4|v| (membership in B forces (v, q) = 1
// whenever every prime factor of q exceeds Delta^4). The B-set pairs off
// under (u,v) -> (-u,-v) into conjugate terms, so the sum is real; the
// imaginary residue is asserted tiny and discarded. The correction phase
// u^2/(4 v q^2) is always included.
//
// prop3_residual compares against the literal count:
//   | r_direct(a/q - theta) - Phihat(0) Vhat(0) - 2 rtilde |.

#include <memory>
#include <vector>

#include "rootgap/bset.hpp"
#include "rootgap/bump.hpp"
#include "rootgap/fkernel.hpp"
#include "rootgap/intmath.hpp"
#include "rootgap/qset.hpp"

namespace rootgap {

// k.theta() must hold the rescaled N*theta. Requires odd q, v_cap >= 1.
double r_tilde(FareyPoint fp, const FKernel& k, u64 n, double delta,
               i64 v_cap);

// v_cap = 0 selects the default ceil(delta * sqrt(n)). phi_table, when
// given, is reused for the internal kernel (it only depends on tf.Phi).
// Requires |n * theta| <= 1/100.
double prop3_residual(FareyPoint fp, const TestFunctionSet& tf, u64 n,
                      double theta, double delta, i64 v_cap = 0,
                      std::shared_ptr<const FourierTable> phi_table = nullptr);

struct Prop3Row {
  u64 q = 0;
  u64 a = 0;
  double theta = 0.0;
  double r_direct = 0.0;
  double r_formula = 0.0;  // Phihat(0) Vhat(0) + 2 rtilde
  double residual = 0.0;
};

// Deterministic arc sample for residual studies: one row per (q, a) with q
// the QSet members ascending and a = 1, 2, ... (coprime to q), cycling until
// at least min_arcs rows exist. v_cap = 0 selects the default.
std::vector<Prop3Row> prop3_sweep(const QSet& qs, const TestFunctionSet& tf,
                                  u64 n, double theta, i64 v_cap,
                                  std::size_t min_arcs);

}  // namespace rootgap
