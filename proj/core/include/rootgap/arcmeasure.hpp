#pragma once

// The minor-arc probability measure
//
//   d mu(x) = (N / L) * sum_{q in QSet} sum_{(a,q)=1} phi(N (x - a/q)) dx,
//   L = sum_{q in QSet} phi_Euler(q),
//
// realized as a fixed Gauss quadrature in the arc variable tau = N theta'
// over the support of the arc weight phi. Node weights are normalized so the
// measure has total mass exactly 1; each arc then carries mass exactly 1/L.
// Arc order is fixed (q ascending, a ascending) and reductions are chunked
// deterministically, so results are bit-identical for any thread count.

#include <cstddef>
#include <functional>
#include <vector>

#include "rootgap/bump.hpp"
#include "rootgap/bset.hpp"
#include "rootgap/intmath.hpp"
#include "rootgap/qset.hpp"
#include "rootgap/sqrtseq.hpp"

namespace rootgap {

struct ThetaNode {
  double tau;     // the rescaled offset N theta'
  double weight;  // Gauss weight times phi(tau), normalized to unit mass
};

class MinorArcMeasure {
 public:
  // nodes must be a positive multiple of 4; the composite rule places
  // nodes/4 + nodes/2 + nodes/4 Gauss points on the ramp/plateau/ramp pieces
  // of phi. The default 64 is the reference grid; 128 is the self-check grid.
  MinorArcMeasure(const QSet& qs, const TestFunctionSet& tf, int nodes = 64);

  const QSet& qset() const { return *qset_; }
  const TestFunctionSet& test_functions() const { return *tf_; }
  u64 L() const { return L_; }
  const std::vector<ThetaNode>& theta_quadrature() const { return nodes_; }
  const std::vector<FareyPoint>& arcs() const { return arcs_; }

 private:
  const QSet* qset_;
  const TestFunctionSet* tf_;
  u64 L_ = 0;
  std::vector<ThetaNode> nodes_;
  std::vector<FareyPoint> arcs_;  // q ascending, a ascending
};

// (N/L) sum_{arcs} int integrand(a/q - theta') phi(N theta') d theta' via the
// fixed tau-quadrature; integrand receives points of [0, 1) (wrapped mod 1).
double measure_integrate(const MinorArcMeasure& mu,
                         const std::function<double(double)>& integrand,
                         u64 n);

// mu-measure of x whose window [x, x + s/N) contains no sqrt(n) mod 1,
// N = seq.n_base. Requires s > 0 and seq built at the QSet's N.
double restricted_void(const MinorArcMeasure& mu, const FracSequence& seq,
                       double s);

// mu-measure of the set where the smoothed count R_{Phi,V}(x; N) falls
// below the hard zero threshold 1e-9. Only n with V(n/N) > 0 and
// N * frac(sqrt(n) - x) inside the open support (0, s + eta) of Phi
// contribute, so R(x) is evaluated as a window sum over a precomputed
// sorted support sequence (96-bit fixed-point window location) rather
// than a fresh O(N) scan per node.
double smoothed_void(const MinorArcMeasure& mu, const TestFunctionSet& tf,
                     u64 n);

}  // namespace rootgap
