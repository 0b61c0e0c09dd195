#ifndef HKIT_NORM_HPP
#define HKIT_NORM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "hkit/polytope.hpp"
#include "hkit/rational.hpp"

namespace hkit {

enum class NormKind { L1, L2, LInf, PolytopalV, PolytopalH };

// Which norm induces distances. Polytopal unit balls must be 0-symmetric with
// the origin interior; both are checked at construction.
class NormSpec {
 public:
  static NormSpec l1() { return NormSpec(NormKind::L1); }
  static NormSpec l2() { return NormSpec(NormKind::L2); }
  static NormSpec linf() { return NormSpec(NormKind::LInf); }
  static NormSpec polytopal(VPolytope ball);
  static NormSpec polytopal(HPolytope ball);

  NormKind kind() const { return kind_; }
  bool is_l2() const { return kind_ == NormKind::L2; }
  bool is_polytopal() const { return kind_ == NormKind::PolytopalV || kind_ == NormKind::PolytopalH; }

  const VPolytope& ball_v() const;
  const HPolytope& ball_h() const;
  int ball_dim() const;

  // H-presentation of the unit ball, normalized to rows u^T x <= 1.
  // L1 expands to the 2^d sign vectors, LInf to +-e_i. Not defined for L2.
  std::vector<Vec> ball_h_normals(int dim) const;

  // V-presentation of the unit ball: L1 gives +-e_i, LInf the 2^d sign
  // vectors. H-presented polytopal balls go through vertex enumeration.
  std::vector<Vec> ball_vertices(int dim) const;

  // Dual norm of u, i.e. the gauge of the polar ball, which equals h(B, u).
  // Exact rational for L1/LInf/polytopal; not defined for L2.
  Rational dual_gauge(const Vec& u) const;

  // ||v|| for the exactly-representable norms; squared value for L2.
  Rational norm_value(const Vec& v) const;

  std::string name() const;

 private:
  explicit NormSpec(NormKind k) : kind_(k) {}
  NormKind kind_;
  std::shared_ptr<const VPolytope> ball_v_;
  std::shared_ptr<const HPolytope> ball_h_;
};

}  // namespace hkit

#endif
