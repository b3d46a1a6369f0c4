/**
 * Newton polyhedra: complete convex subsets Gamma of the positive orthant,
 * stored by their minimal vertex set,
 *
 *     Gamma = conv(vertices) + R_+^n,
 *
 * together with the tropical semiring structure.  Tropical addition is the
 * convex hull of the union, tropical multiplication is Minkowski addition,
 * and positive scalars act coordinatewise.  The empty set (image of the
 * tropical zero u == -inf) and the whole orthant (image of the tropical
 * unit, vertex set {origin}) are first-class values.
 *
 * Everything in this module is exact rational arithmetic; all quantities
 * are minima/maxima of linear forms, so no tolerances are involved.
 */

#ifndef TROPSING_POLYHEDRON_HPP
#define TROPSING_POLYHEDRON_HPP

#include "tropsing/errors.hpp"
#include "tropsing/germ.hpp"
#include "tropsing/rational.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace tropsing {

/// One inequality <normal, x> >= offset valid on Gamma, tight on an
/// affinely spanning set of its vertices.  Normals are primitive integer
/// vectors, componentwise >= 0 with at least one positive coordinate; the
/// trivial orthant constraints x_k >= 0 are implicit and never listed.
struct Facet {
  RatVec normal;
  Rat offset;
  bool operator==(const Facet& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

class NewtonPolyhedron {
 public:
  /// The empty polyhedron (tropical zero).
  explicit NewtonPolyhedron(int dim);

  /// conv(points) + R_+^n reduced to its minimal vertex set.
  static NewtonPolyhedron from_points(int dim, std::vector<RatVec> points);

  /// The whole orthant (tropical unit), vertex set {origin}.
  static NewtonPolyhedron unit(int dim);

  int dim() const { return dim_; }
  bool empty() const { return vertices_.empty(); }
  bool is_unit() const { return vertices_.size() == 1 && vertices_[0].isZero(); }
  bool contains_origin() const;

  /// Minimal generating vertex set, lexicographically sorted.
  const std::vector<RatVec>& vertices() const { return vertices_; }

  /// Irredundant H-representation inside the orthant (lazily computed by
  /// the double description method, cached, write-once).  Requires a
  /// nonempty polyhedron.
  const std::vector<Facet>& facets() const;

  bool operator==(const NewtonPolyhedron& o) const;
  bool operator!=(const NewtonPolyhedron& o) const { return !(*this == o); }

 private:
  struct FacetCache {
    std::once_flag once;
    std::vector<Facet> facets;
  };
  int dim_;
  std::vector<RatVec> vertices_;  // minimal, lex sorted
  std::shared_ptr<FacetCache> cache_;
};

/// Newton polyhedron of a germ: conv(support) + R_+^n.
NewtonPolyhedron from_support(const GermSupport& u);

/// Exact membership p in Gamma, decided by a rational feasibility LP
/// (p = convex combination of vertices + nonnegative slack).
bool member(const NewtonPolyhedron& gamma, const RatVec& p);

/// Minimal vertex set of conv(points) + R_+^n; removal-order independent.
NewtonPolyhedron reduce(int dim, std::vector<RatVec> points);

/// Tropical sum: conv(A u B).
NewtonPolyhedron trop_add(const NewtonPolyhedron& a, const NewtonPolyhedron& b);

/// Tropical product: Minkowski sum A + B.
NewtonPolyhedron trop_mul(const NewtonPolyhedron& a, const NewtonPolyhedron& b);

/// c * Gamma for c > 0.
NewtonPolyhedron scale(const NewtonPolyhedron& gamma, const Rat& c);

/// Support function psi(t) = sup{<t,a> : a in Gamma} for componentwise
/// t <= 0 (the supremum is attained on the vertex set); -inf when empty.
/// Throws DomainError when some t_k > 0.
ExtRat support_value(const NewtonPolyhedron& gamma, const RatVec& t);

/// Directional number min{<a,v> : v vertex} for strictly positive a; +inf
/// when empty.  For Gamma = Gamma_{log|f|} this is the directional Lelong
/// number nu(log|f|, a), the index of f with respect to the weight a.
ExtRat directional_number(const NewtonPolyhedron& gamma, const RatVec& a);

/// True iff R_+^n \ Gamma is bounded: every coordinate axis carries a
/// vertex c_k * e_k.  Equivalently the indicator is locally bounded
/// outside the origin.
bool covol_finite(const NewtonPolyhedron& gamma);

/// Intercept c_k of the axis-k vertex c_k * e_k, when present.
std::optional<Rat> axis_intercept(const NewtonPolyhedron& gamma, int axis);

}  // namespace tropsing

#endif  // TROPSING_POLYHEDRON_HPP
