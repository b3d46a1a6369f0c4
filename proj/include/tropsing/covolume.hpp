/**
 * Exact covolume Covol(Gamma) = vol(R_+^n \ Gamma), mixed covolumes by
 * polarization, and the Kushnirenko/Bernstein multiplicity bounds
 *
 *     m_F >= n! Covol(Gamma_{log|F|}),
 *     m_F >= n! Covol(Gamma_1, ..., Gamma_n).
 *
 * The complement is bounded iff every axis carries a vertex; in that case
 * it sits inside [0,M]^n for M = max axis intercept (a point with some
 * coordinate above M is absorbed by the corresponding axis vertex plus the
 * orthant), so Covol = M^n - vol(Gamma n [0,M]^n).  The clipped polytope's
 * volume comes from exact vertex enumeration of its H-representation and a
 * fan triangulation from a base vertex with determinant simplex volumes.
 */

#ifndef TROPSING_COVOLUME_HPP
#define TROPSING_COVOLUME_HPP

#include "tropsing/germ.hpp"
#include "tropsing/polyhedron.hpp"
#include "tropsing/rational.hpp"

#include <optional>
#include <vector>

namespace tropsing {

struct CovolResult {
  ExtRat value;             // Covol(Gamma), >= 0 or +inf
  ExtRat residual_ma_mass;  // n! * value: the residual Monge-Ampere mass
  int triangulation_size = 0;
  bool finite() const { return value.is_finite(); }
};

CovolResult covol(const NewtonPolyhedron& gamma);

struct MixedCovolResult {
  ExtRat value;
  /// When infinite: a subset S (0-based slot indices) whose Minkowski sum
  /// has infinite covolume.
  std::optional<std::vector<int>> infinite_subset;
};

/// Polarization of Covol over Minkowski addition:
///   (1/n!) sum_{S nonempty} (-1)^{n-|S|} Covol(sum_{i in S} A_i).
/// Symmetric, recovers Covol on the diagonal, Minkowski-linear per slot.
/// Any infinite term makes the result infinite.
MixedCovolResult mixed_covol(const std::vector<NewtonPolyhedron>& slots);

/// n! Covol of the union hull of the component polyhedra; a lower bound
/// for the multiplicity of F at an isolated zero, infinite when the union
/// hull misses an axis (non-isolated zero at the polyhedral level).
ExtRat kushnirenko_bound(const MapSpec& f);

/// n! times the mixed covolume of the component polyhedra.
ExtRat bernstein_bound(const MapSpec& f);

/// Exact multiplicity |det(J_1,...,J_n)| of a monomial map (one exponent
/// per component); +inf when the exponent matrix is singular (non-finite
/// map).  Throws DomainError when some component is not a monomial.
ExtRat monomial_map_multiplicity(const MapSpec& f);

/// Union hull Gamma_{log|F|} of the component polyhedra.
NewtonPolyhedron map_polyhedron(const MapSpec& f);

namespace detail {

/// Halfspace <normal, x> >= offset.
struct HalfSpace {
  RatVec normal;
  Rat offset;
};

/// All vertices of the (bounded) polyhedron {x : constraints}, by exact
/// enumeration of basic solutions.
std::vector<RatVec> enumerate_vertices(int dim, const std::vector<HalfSpace>& constraints);

/// Exact volume of the bounded polytope given by both representations;
/// 0 when the vertex set is not full-dimensional.  On request reports the
/// number of top-level simplices in the fan triangulation.
Rat polytope_volume(int dim, const std::vector<RatVec>& vertices,
                    const std::vector<HalfSpace>& constraints, int* simplices = nullptr);

}  // namespace detail

}  // namespace tropsing

#endif  // TROPSING_COVOLUME_HPP
