#pragma once

#include "rootgap/bump.hpp"
#include "rootgap/fixedpoint.hpp"
#include "rootgap/intmath.hpp"

namespace rootgap {

// The smoothed counting function
//
//   R(x) = sum_n V(n/n_scale) * Phi(n_scale * frac(sqrt(n) - x)),
//
// summed literally over n with n/n_scale in [1 - eta, 2 + eta]. The
// fractional part is carried in 96-bit fixed point, so x given as a Frac96
// (e.g. an exact rational a/q - tau/n_scale) loses nothing. Terms are
// accumulated in ascending n; blocks of n where Phi vanishes identically
// are skipped, which leaves the floating-point result bit-identical to the
// full literal loop. Requires tf.Phi supported inside (-1, s + eta) and
// tf.V inside [1 - eta, 2 + eta] (the default test functions are).
double r_direct(u64 n_scale, const TestFunctionSet& tf, Frac96 x);

// Convenience overload; requires 0 <= x < 1.
double r_direct(u64 n_scale, const TestFunctionSet& tf, double x);

}  // namespace rootgap
