#ifndef HKIT_HAUSDORFF_HPP
#define HKIT_HAUSDORFF_HPP

#include "hkit/norm.hpp"
#include "hkit/polytope.hpp"

namespace hkit {

// value = max(directed_pq, directed_qp); squared values throughout for L2.
struct HausdorffResult {
  Rational value;
  bool squared = false;
  Rational directed_pq;
  Rational directed_qp;
  Vec argmax_p;  // vertex of P realizing directed_pq
  Vec argmax_q;  // vertex of Q realizing directed_qp
};

// Desk-scale limits for enumeration. HKIT_SCALE_GUARD="dim:rows" overrides
// (documented as unsafe; runtimes explode quickly).
struct EnumGuard {
  int max_dim = 8;
  int max_rows = 40;
  static EnumGuard from_env();
  static EnumGuard unlimited() { return {1 << 20, 1 << 20}; }
};

// Exact Hausdorff distance of two V-polytopes: the directed distances are
// maxima of per-vertex distances, attained at vertices by convexity.
HausdorffResult hausdorff_vv(const VPolytope& p, const VPolytope& q, const NormSpec& n);

// All extreme points of a bounded H-polytope, deduplicated, lexicographically
// sorted. Exact. Dispatches between exhaustive d-subset search (small inputs)
// and an exact pivoting walk over the vertex-edge graph.
VPolytope vertex_enumeration(const HPolytope& p, const EnumGuard& guard = {});

// Irredundant facet description of a full-dimensional V-polytope (guarded
// brute force over vertex subsets; the reverse direction of the above).
HPolytope facet_enumeration(const VPolytope& p, const EnumGuard& guard = {});

// Desk-scale oracle for presentations the general problem is hard for:
// H-presented inputs get their vertex sets enumerated; per-vertex distances
// are measured against the other body in its given presentation (the value
// is presentation-independent).
HausdorffResult hausdorff_oracle(const AnyPolytope& p, const AnyPolytope& q, const NormSpec& n,
                                 const EnumGuard& guard = {});

// |h(P,u) - h(Q,u)| after normalizing u onto the boundary of the dual ball;
// always a lower bound on the Hausdorff distance. For L2 the returned value
// is squared (the normalizer is irrational).
Rational support_gap(const AnyPolytope& p, const AnyPolytope& q, const Vec& u, const NormSpec& n);

}  // namespace hkit

#endif
