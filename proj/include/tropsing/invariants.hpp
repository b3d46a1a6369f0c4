/**
 * Scalar invariants of a singularity read off its Newton polyhedron:
 * Lelong numbers, directional numbers for weights, relative types with
 * LP certificates, the integrability index of the indicator and the log
 * canonical threshold.
 *
 * Degenerate inputs follow the tropical zero/unit semantics throughout:
 * the empty polyhedron (u == -inf) has nu = sigma = lambda = +inf and
 * lct = 0; an origin-containing polyhedron (nonsingular germ) has
 * nu = sigma = lambda = 0 and lct = +inf.
 */

#ifndef TROPSING_INVARIANTS_HPP
#define TROPSING_INVARIANTS_HPP

#include "tropsing/polyhedron.hpp"
#include "tropsing/rational.hpp"

#include <utility>
#include <vector>

namespace tropsing {

/// Strictly positive direction vector a in Q_+^n.
class Weight {
 public:
  explicit Weight(RatVec coords) : coords_(std::move(coords)) {
    for (Eigen::Index i = 0; i < coords_.size(); ++i)
      if (coords_(i) <= 0) throw DomainError("Weight: coordinates must be > 0");
    if (coords_.size() == 0) throw DomainError("Weight: empty");
  }
  const RatVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

 private:
  RatVec coords_;
};

/// nu(u) = nu(u, (1,...,1)); the vanishing order m_f for u = log|f|.
ExtRat lelong_number(const NewtonPolyhedron& gamma);

/// Polyhedron of the indicator of the directional weight
/// phi_a = max_k a_k^{-1} log|z_k|: vertices e_k / a_k.
NewtonPolyhedron directional_weight_polyhedron(const Weight& a);

/// One tropically linear functional nu(., a) evaluated at its LP-optimal
/// weight: for the vertex J of Gamma_u, `weight` minimizes <a, J> over
/// the closure of A_Psi = {a >= 0 : nu(Psi, a) >= 1}.
struct TypeCertificate {
  RatVec vertex;
  RatVec weight;
  Rat value;
};

struct RelativeType {
  ExtRat sigma;
  std::vector<TypeCertificate> certificates;
};

/// Relative type sigma(u, Psi) = min{nu(u,a) : a in A_Psi}, computed as an
/// exact LP per vertex of Gamma_u.  Requires Psi maximal: finite covolume
/// (locally bounded off 0) and singular (origin not in Gamma_Psi); throws
/// PreconditionError otherwise.
RelativeType relative_type(const NewtonPolyhedron& gamma_u, const NewtonPolyhedron& gamma_psi);

/// Demailly's number for the directional weight phi_a:
/// nu(u, phi_a) = nu(u, a) / (a_1 ... a_n).
ExtRat weighted_directional_lelong(const NewtonPolyhedron& gamma_u, const Weight& a);

/// Integrability index of the indicator,
///   lambda_{Psi_u} = sup{nu(u,a) : sum a_k = 1},
/// as an exact LP.  A lower bound for lambda_u, exact for multicircled
/// singularities.  Conventions: empty -> +inf, origin included -> 0.
ExtRat lambda_indicator(const NewtonPolyhedron& gamma);

/// The weight realizing lambda_indicator (simplex maximizer), when the
/// polyhedron is nonempty and singular.
RatVec lambda_optimizer(const NewtonPolyhedron& gamma);

/// Log canonical threshold 1 / lambda_indicator, exact for monomial
/// ideals.  Conventions: empty -> 0, nonsingular -> +inf.
ExtRat lct(const NewtonPolyhedron& gamma);

/// min{t : t*(1,...,1) in Gamma} from the H-representation: the diagonal
/// enters Gamma at max_f offset_f / |normal_f|_1.  Equals lambda_indicator
/// by LP duality; used as a cross-check.
Rat diagonal_entry_via_facets(const NewtonPolyhedron& gamma);

/// Aggregated report for one germ.
struct InvariantReport {
  int dim = 0;
  ExtRat lelong;
  std::vector<std::pair<RatVec, ExtRat>> directional;  // (weight, nu)
  ExtRat lambda;
  ExtRat log_canonical_threshold;
  ExtRat covolume;
  ExtRat kushnirenko;  // n! * covolume (residual Monge-Ampere mass)
  bool nonsingular = false;
  bool empty = false;
};

InvariantReport analyze(const NewtonPolyhedron& gamma, const std::vector<Weight>& weights);

}  // namespace tropsing

#endif  // TROPSING_INVARIANTS_HPP
