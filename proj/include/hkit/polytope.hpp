#ifndef HKIT_POLYTOPE_HPP
#define HKIT_POLYTOPE_HPP

#include <atomic>
#include <variant>
#include <vector>

#include "hkit/lp.hpp"
#include "hkit/rational.hpp"

namespace hkit {

// Convex hull of finitely many points. Vertices need not be irredundant;
// every stored point must share the dimension and the list must be nonempty.
struct VPolytope {
  int dim = 0;
  std::vector<Vec> vertices;
};

// Bounded intersection of halfspaces a^T x <= b. Boundedness is checked on
// demand (LP per coordinate direction) and cached.
struct HPolytope {
  int dim = 0;
  std::vector<LinRow> rows;

  HPolytope() = default;
  HPolytope(int d, std::vector<LinRow> r) : dim(d), rows(std::move(r)) {}
  HPolytope(const HPolytope& o) : dim(o.dim), rows(o.rows), bounded_cache_(o.bounded_cache_.load()) {}
  HPolytope(HPolytope&& o) noexcept
      : dim(o.dim), rows(std::move(o.rows)), bounded_cache_(o.bounded_cache_.load()) {}
  HPolytope& operator=(const HPolytope& o) {
    dim = o.dim;
    rows = o.rows;
    bounded_cache_.store(o.bounded_cache_.load());
    return *this;
  }
  HPolytope& operator=(HPolytope&& o) noexcept {
    dim = o.dim;
    rows = std::move(o.rows);
    bounded_cache_.store(o.bounded_cache_.load());
    return *this;
  }

  // -1 unknown, 0 unbounded, 1 bounded
  mutable std::atomic<int> bounded_cache_{-1};
};

struct BoundingBox {
  Vec lower;        // componentwise box minimum
  Vec upper;        // componentwise box maximum
  Rational diam_sq; // squared Euclidean diagonal, kept exact
};

using AnyPolytope = std::variant<VPolytope, HPolytope>;

int dim_of(const AnyPolytope& p);

// h(P, a) = max{a^T x : x in P}; exact. Throws UnboundedPolytope for an
// H-polytope unbounded in direction a.
Rational support(const VPolytope& p, const Vec& a);
Rational support(const HPolytope& p, const Vec& a);
Rational support(const AnyPolytope& p, const Vec& a);

// A maximizer realizing the support value.
Vec support_point(const VPolytope& p, const Vec& a);
Vec support_point(const HPolytope& p, const Vec& a);

bool is_bounded(const HPolytope& p);
bool is_nonempty(const HPolytope& p);

BoundingBox bounding_box(const VPolytope& p);
BoundingBox bounding_box(const HPolytope& p);
BoundingBox bounding_box(const AnyPolytope& p);

bool contains_point(const VPolytope& p, const Vec& x);  // LP feasibility, exact
bool contains_point(const HPolytope& p, const Vec& x);  // exact row checks
bool contains_point(const AnyPolytope& p, const Vec& x);

// Block-diagonal stacking; dim = sum of part dims.
HPolytope direct_product(const std::vector<HPolytope>& parts);

// K = -K. Syntactic check first (vertex set / row set closed under
// negation), then a semantic support-function fallback.
bool is_zero_symmetric(const VPolytope& p);
bool is_zero_symmetric(const HPolytope& p);
bool is_zero_symmetric(const AnyPolytope& p);

// rank of the vertex displacement space == dim
bool is_full_dimensional(const VPolytope& p);

// x -> alpha x + c applied to every vertex.
VPolytope apply_homothety(const VPolytope& p, const Rational& alpha, const Vec& c);
VPolytope translate(const VPolytope& p, const Vec& t);
HPolytope translate(const HPolytope& p, const Vec& t);

// Centroid of the vertex list (an interior point for full-dimensional input).
Vec vertex_centroid(const VPolytope& p);

}  // namespace hkit

#endif
