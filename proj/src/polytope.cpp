#include "hkit/polytope.hpp"

#include <algorithm>
#include <set>

#include "hkit/error.hpp"
#include "hkit/linalg.hpp"

namespace hkit {

namespace {

void check_dim(int dim, const Vec& a, const char* what) {
  if (static_cast<int>(a.size()) != dim) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

void check_valid(const VPolytope& p) {
  if (p.vertices.empty()) throw EmptyPolytope("V-polytope has no vertices");
  for (const auto& v : p.vertices) check_dim(p.dim, v, "V-polytope vertex");
}

void check_valid(const HPolytope& p) {
  for (const auto& r : p.rows) check_dim(p.dim, r.a, "H-polytope row");
}

// LP over the rows of p: maximize a^T x.
LPOutcome support_lp(const HPolytope& p, const Vec& a) {
  LinearProgram lp;
  lp.objective = a;
  lp.le_rows = p.rows;
  return solve_lp(lp);
}

}  // namespace

int dim_of(const AnyPolytope& p) {
  return std::visit([](const auto& q) { return q.dim; }, p);
}

Rational support(const VPolytope& p, const Vec& a) {
  check_valid(p);
  check_dim(p.dim, a, "support direction");
  Rational best = dot(a, p.vertices.front());
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    Rational v = dot(a, p.vertices[i]);
    if (v > best) best = v;
  }
  return best;
}

Vec support_point(const VPolytope& p, const Vec& a) {
  check_valid(p);
  check_dim(p.dim, a, "support direction");
  std::size_t arg = 0;
  Rational best = dot(a, p.vertices.front());
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    Rational v = dot(a, p.vertices[i]);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  return p.vertices[arg];
}

Rational support(const HPolytope& p, const Vec& a) {
  check_valid(p);
  check_dim(p.dim, a, "support direction");
  auto out = support_lp(p, a);
  if (out.status == LPStatus::Infeasible) throw EmptyPolytope("support: empty H-polytope");
  if (out.status == LPStatus::Unbounded)
    throw UnboundedPolytope("support: H-polytope unbounded in requested direction");
  return out.value;
}

Vec support_point(const HPolytope& p, const Vec& a) {
  check_valid(p);
  check_dim(p.dim, a, "support direction");
  auto out = support_lp(p, a);
  if (out.status == LPStatus::Infeasible) throw EmptyPolytope("support: empty H-polytope");
  if (out.status == LPStatus::Unbounded)
    throw UnboundedPolytope("support: H-polytope unbounded in requested direction");
  return out.solution;
}

Rational support(const AnyPolytope& p, const Vec& a) {
  return std::visit([&](const auto& q) { return support(q, a); }, p);
}

bool is_nonempty(const HPolytope& p) {
  check_valid(p);
  LinearProgram lp;
  lp.objective.assign(p.dim, Rational(0));
  lp.le_rows = p.rows;
  return solve_lp(lp).status == LPStatus::Optimal;
}

bool is_bounded(const HPolytope& p) {
  int cached = p.bounded_cache_.load();
  if (cached >= 0) return cached == 1;
  check_valid(p);
  bool bounded = true;
  for (int i = 0; i < p.dim && bounded; ++i) {
    for (int sign = 0; sign < 2 && bounded; ++sign) {
      Vec dir(p.dim, Rational(0));
      dir[i] = sign ? Rational(-1) : Rational(1);
      auto out = support_lp(p, dir);
      if (out.status == LPStatus::Unbounded) bounded = false;
      if (out.status == LPStatus::Infeasible) throw EmptyPolytope("is_bounded: empty H-polytope");
    }
  }
  p.bounded_cache_.store(bounded ? 1 : 0);
  return bounded;
}

namespace {

template <typename P>
BoundingBox box_impl(const P& p, int dim) {
  BoundingBox box;
  box.lower.resize(dim);
  box.upper.resize(dim);
  box.diam_sq = 0;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, Rational(0));
    e[i] = 1;
    box.upper[i] = support(p, e);
    e[i] = -1;
    box.lower[i] = -support(p, e);
    Rational side = box.upper[i] - box.lower[i];
    box.diam_sq += side * side;
  }
  return box;
}

}  // namespace

BoundingBox bounding_box(const VPolytope& p) {
  check_valid(p);
  return box_impl(p, p.dim);
}

BoundingBox bounding_box(const HPolytope& p) {
  check_valid(p);
  if (!is_bounded(p)) throw UnboundedPolytope("bounding_box: unbounded H-polytope");
  return box_impl(p, p.dim);
}

BoundingBox bounding_box(const AnyPolytope& p) {
  return std::visit([](const auto& q) { return bounding_box(q); }, p);
}

bool contains_point(const HPolytope& p, const Vec& x) {
  check_valid(p);
  check_dim(p.dim, x, "contains_point");
  for (const auto& r : p.rows)
    if (dot(r.a, x) > r.b) return false;
  return true;
}

bool contains_point(const VPolytope& p, const Vec& x) {
  check_valid(p);
  check_dim(p.dim, x, "contains_point");
  // Feasibility of the convex-combination system sum(l_i v_i) = x, sum l = 1.
  const std::size_t n = p.vertices.size();
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  lp.nonneg.assign(n, 1);
  for (int coord = 0; coord < p.dim; ++coord) {
    LinRow row;
    row.a.resize(n);
    for (std::size_t i = 0; i < n; ++i) row.a[i] = p.vertices[i][coord];
    row.b = x[coord];
    lp.eq_rows.push_back(std::move(row));
  }
  LinRow ones;
  ones.a.assign(n, Rational(1));
  ones.b = 1;
  lp.eq_rows.push_back(std::move(ones));
  return solve_lp(lp).status == LPStatus::Optimal;
}

bool contains_point(const AnyPolytope& p, const Vec& x) {
  return std::visit([&](const auto& q) { return contains_point(q, x); }, p);
}

HPolytope direct_product(const std::vector<HPolytope>& parts) {
  if (parts.empty()) throw Error("direct_product: empty part list");
  int dim = 0;
  for (const auto& part : parts) {
    check_valid(part);
    dim += part.dim;
  }
  HPolytope out;
  out.dim = dim;
  int offset = 0;
  for (const auto& part : parts) {
    for (const auto& r : part.rows) {
      LinRow row;
      row.a.assign(dim, Rational(0));
      for (int j = 0; j < part.dim; ++j) row.a[offset + j] = r.a[j];
      row.b = r.b;
      out.rows.push_back(std::move(row));
    }
    offset += part.dim;
  }
  return out;
}

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace

bool is_zero_symmetric(const VPolytope& p) {
  check_valid(p);
  std::set<Vec, VecLess> verts(p.vertices.begin(), p.vertices.end());
  bool syntactic = true;
  for (const auto& v : verts) {
    if (!verts.count(negate(v))) {
      syntactic = false;
      break;
    }
  }
  if (syntactic) return true;
  // Semantic fallback on the vertex directions.
  for (const auto& v : p.vertices)
    if (support(p, v) != support(p, negate(v))) return false;
  return true;
}

bool is_zero_symmetric(const HPolytope& p) {
  check_valid(p);
  std::set<std::pair<Vec, Rational>> rows;
  for (const auto& r : p.rows) rows.insert({r.a, r.b});
  bool syntactic = true;
  for (const auto& r : p.rows) {
    if (!rows.count({negate(r.a), r.b})) {
      syntactic = false;
      break;
    }
  }
  if (syntactic) return true;
  for (const auto& r : p.rows)
    if (support(p, r.a) != support(p, negate(r.a))) return false;
  return true;
}

bool is_zero_symmetric(const AnyPolytope& p) {
  return std::visit([](const auto& q) { return is_zero_symmetric(q); }, p);
}

bool is_full_dimensional(const VPolytope& p) {
  check_valid(p);
  RatMatrix diffs;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    diffs.push_back(sub(p.vertices[i], p.vertices[0]));
  return rank(std::move(diffs)) == p.dim;
}

VPolytope apply_homothety(const VPolytope& p, const Rational& alpha, const Vec& c) {
  check_valid(p);
  check_dim(p.dim, c, "apply_homothety");
  VPolytope out;
  out.dim = p.dim;
  out.vertices.reserve(p.vertices.size());
  for (const auto& v : p.vertices) out.vertices.push_back(add(scale(alpha, v), c));
  return out;
}

VPolytope translate(const VPolytope& p, const Vec& t) { return apply_homothety(p, 1, t); }

HPolytope translate(const HPolytope& p, const Vec& t) {
  check_valid(p);
  check_dim(p.dim, t, "translate");
  HPolytope out;
  out.dim = p.dim;
  out.rows.reserve(p.rows.size());
  for (const auto& r : p.rows) out.rows.push_back({r.a, r.b + dot(r.a, t)});
  return out;
}

Vec vertex_centroid(const VPolytope& p) {
  check_valid(p);
  Vec c(p.dim, Rational(0));
  for (const auto& v : p.vertices) c = add(c, v);
  return scale(Rational(1, static_cast<int>(p.vertices.size())), c);
}

}  // namespace hkit
