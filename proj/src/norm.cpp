#include "hkit/norm.hpp"

#include "hkit/error.hpp"
#include "hkit/hausdorff.hpp"
#include "hkit/lp.hpp"

namespace hkit {

namespace {

void validate_ball_common(bool zero_symmetric, bool full_dim, const char* what) {
  if (!zero_symmetric) throw InvalidBall(std::string(what) + ": unit ball must be 0-symmetric");
  if (!full_dim)
    throw InvalidBall(std::string(what) + ": unit ball must contain the origin in its interior");
}

std::vector<Vec> sign_vectors(int dim) {
  if (dim > 20) throw ScaleGuardExceeded("sign-vector expansion beyond dimension 20");
  std::vector<Vec> out;
  out.reserve(std::size_t(1) << dim);
  for (std::size_t mask = 0; mask < (std::size_t(1) << dim); ++mask) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? Rational(-1) : Rational(1);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> unit_vectors(int dim) {
  std::vector<Vec> out;
  out.reserve(2 * std::size_t(dim));
  for (int i = 0; i < dim; ++i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    out.push_back(v);
    v[i] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

NormSpec NormSpec::polytopal(VPolytope ball) {
  // 0-symmetric + full-dimensional implies the origin is interior.
  validate_ball_common(is_zero_symmetric(ball), is_full_dimensional(ball), "polytopal ball (V)");
  NormSpec n(NormKind::PolytopalV);
  n.ball_v_ = std::make_shared<const VPolytope>(std::move(ball));
  return n;
}

NormSpec NormSpec::polytopal(HPolytope ball) {
  if (!is_bounded(ball)) throw InvalidBall("polytopal ball (H): unbounded presentation");
  bool origin_interior = true;
  for (const auto& r : ball.rows)
    if (r.b <= 0) origin_interior = false;
  validate_ball_common(is_zero_symmetric(ball), origin_interior, "polytopal ball (H)");
  NormSpec n(NormKind::PolytopalH);
  n.ball_h_ = std::make_shared<const HPolytope>(std::move(ball));
  return n;
}

const VPolytope& NormSpec::ball_v() const {
  if (!ball_v_) throw Error("norm has no V-presented ball");
  return *ball_v_;
}

const HPolytope& NormSpec::ball_h() const {
  if (!ball_h_) throw Error("norm has no H-presented ball");
  return *ball_h_;
}

int NormSpec::ball_dim() const {
  if (ball_v_) return ball_v_->dim;
  if (ball_h_) return ball_h_->dim;
  return 0;
}

std::vector<Vec> NormSpec::ball_h_normals(int dim) const {
  switch (kind_) {
    case NormKind::L1:
      return sign_vectors(dim);
    case NormKind::LInf:
      return unit_vectors(dim);
    case NormKind::PolytopalH: {
      if (ball_h_->dim != dim) throw DimensionMismatch("polytopal ball dimension mismatch");
      std::vector<Vec> out;
      out.reserve(ball_h_->rows.size());
      for (const auto& r : ball_h_->rows) out.push_back(scale(1 / r.b, r.a));
      return out;
    }
    case NormKind::PolytopalV: {
      if (ball_v_->dim != dim) throw DimensionMismatch("polytopal ball dimension mismatch");
      auto facets = facet_enumeration(*ball_v_);
      std::vector<Vec> out;
      out.reserve(facets.rows.size());
      for (const auto& r : facets.rows) out.push_back(scale(1 / r.b, r.a));
      return out;
    }
    case NormKind::L2:
      break;
  }
  throw Error("L2 ball has no polyhedral H-presentation");
}

std::vector<Vec> NormSpec::ball_vertices(int dim) const {
  switch (kind_) {
    case NormKind::L1:
      return unit_vectors(dim);
    case NormKind::LInf:
      return sign_vectors(dim);
    case NormKind::PolytopalV:
      if (ball_v_->dim != dim) throw DimensionMismatch("polytopal ball dimension mismatch");
      return ball_v_->vertices;
    case NormKind::PolytopalH: {
      if (ball_h_->dim != dim) throw DimensionMismatch("polytopal ball dimension mismatch");
      return vertex_enumeration(*ball_h_).vertices;
    }
    case NormKind::L2:
      break;
  }
  throw Error("L2 ball has no finite vertex set");
}

Rational NormSpec::dual_gauge(const Vec& u) const {
  switch (kind_) {
    case NormKind::L1:
      return norm_inf(u);
    case NormKind::LInf:
      return norm1(u);
    case NormKind::PolytopalV:
      return support(*ball_v_, u);
    case NormKind::PolytopalH:
      return support(*ball_h_, u);
    case NormKind::L2:
      break;
  }
  throw Error("dual gauge of the Euclidean ball is irrational; use squared comparisons");
}

Rational NormSpec::norm_value(const Vec& v) const {
  switch (kind_) {
    case NormKind::L1:
      return norm1(v);
    case NormKind::LInf:
      return norm_inf(v);
    case NormKind::L2:
      return norm2_sq(v);
    case NormKind::PolytopalH: {
      // gauge of v: max_i a_i^T v / b_i
      Rational g = 0;
      for (const auto& r : ball_h_->rows) {
        Rational q = dot(r.a, v) / r.b;
        if (q > g) g = q;
      }
      return g;
    }
    case NormKind::PolytopalV: {
      // min sum(mu) s.t. sum(mu_l w_l) = v, mu >= 0
      const auto& w = ball_v_->vertices;
      LinearProgram lp;
      lp.objective.assign(w.size(), Rational(-1));
      lp.nonneg.assign(w.size(), 1);
      for (int coord = 0; coord < ball_v_->dim; ++coord) {
        LinRow row;
        row.a.resize(w.size());
        for (std::size_t l = 0; l < w.size(); ++l) row.a[l] = w[l][coord];
        row.b = v[coord];
        lp.eq_rows.push_back(std::move(row));
      }
      auto out = solve_lp(lp);
      if (out.status != LPStatus::Optimal) throw Error("gauge LP failed");
      return -out.value;
    }
  }
  throw Error("unreachable");
}

std::string NormSpec::name() const {
  switch (kind_) {
    case NormKind::L1:
      return "l1";
    case NormKind::L2:
      return "l2";
    case NormKind::LInf:
      return "linf";
    case NormKind::PolytopalV:
      return "polytopal-v";
    case NormKind::PolytopalH:
      return "polytopal-h";
  }
  return "?";
}

}  // namespace hkit
