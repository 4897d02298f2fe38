#include "rootgap/rdirect.hpp"

#include <cmath>

#include "rootgap/errors.hpp"

namespace rootgap {

namespace {

struct WalkState {
  u64 n_lo, n_hi;  // inclusive summation range from V's support
  double nd;
  Frac96 x;
  const TestFunctionSet* tf;
  double total = 0.0;
  u64 next_n = 0;  // monotone cursor; keeps padded windows from overlapping

  // Adds every n in [a, b] (clamped) literally, ascending.
  void add_range(u64 a, u64 b) {
    if (a < n_lo) a = n_lo;
    if (a < next_n) a = next_n;
    if (b > n_hi) b = n_hi;
    for (u64 n = a; n <= b; ++n) {
      const double f = frac96_to_double(frac96_sub_mod1(frac_sqrt(n), x));
      total += tf->V.value(static_cast<double>(n) / nd) *
               tf->Phi.value(nd * f);
    }
    if (b >= a) next_n = b + 1;
  }

  // Candidate n with sqrt(n) in (root_lo, root_hi), padded by 2 on both
  // sides so double rounding of the interval ends cannot drop a term; the
  // padding only adds terms where Phi evaluates to exactly 0.
  void add_root_window(u64 m, double root_lo, double root_hi) {
    const double block_lo = static_cast<double>(m);
    const double block_hi = static_cast<double>(m + 1);
    if (root_hi <= block_lo || root_lo >= block_hi) return;
    if (root_lo < block_lo) root_lo = block_lo;
    if (root_hi > block_hi) root_hi = block_hi;
    const double a = root_lo * root_lo;
    const double b = root_hi * root_hi;
    const u64 lo = a < 2.0 ? 0 : static_cast<u64>(a) - 2;
    const u64 hi = static_cast<u64>(b) + 2;
    add_range(std::max(lo, m * m), std::min(hi, (m + 1) * (m + 1) - 1));
  }
};

}  // namespace

double r_direct(u64 n_scale, const TestFunctionSet& tf, Frac96 x) {
  if (n_scale < 100 || n_scale > 100000000) {
    throw UsageError("r_direct: n_scale must lie in [100, 1e8]");
  }
  WalkState st;
  st.nd = static_cast<double>(n_scale);
  st.x = x;
  st.tf = &tf;
  st.n_lo = static_cast<u64>(std::ceil((1.0 - tf.eta) * st.nd));
  st.n_hi = static_cast<u64>(std::floor((2.0 + tf.eta) * st.nd));
  if (st.n_lo < 1) st.n_lo = 1;

  // Phi lives on (0, s + eta); the scaled window in frac(sqrt(n) - x) has
  // width w. Within each square block [m^2, (m+1)^2) the admissible n have
  // sqrt(n) in (m + xd, m + xd + w), plus the wrapped copy one unit lower
  // when x + w spills past 1.
  const double w = (tf.s + tf.eta) / st.nd;
  if (w >= 1.0) {  // window covers the whole circle: plain literal sum
    st.add_range(st.n_lo, st.n_hi);
    return st.total;
  }
  const double xd = frac96_to_double(x);
  const u64 m_lo = isqrt_u64(st.n_lo);
  const u64 m_hi = isqrt_u64(st.n_hi);
  for (u64 m = m_lo; m <= m_hi; ++m) {
    const double md = static_cast<double>(m);
    if (xd + w > 1.0) {
      st.add_root_window(m, md + xd - 1.0, md + xd - 1.0 + w);
    }
    st.add_root_window(m, md + xd, md + xd + w);
  }
  return st.total;
}

double r_direct(u64 n_scale, const TestFunctionSet& tf, double x) {
  if (!(x >= 0.0) || x >= 1.0) {
    throw UsageError("r_direct: x must lie in [0,1)");
  }
  return r_direct(n_scale, tf, frac96_from_double(x));
}

}  // namespace rootgap
