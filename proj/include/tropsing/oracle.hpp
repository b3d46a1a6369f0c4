/**
 * Independent brute-force oracles: Monte Carlo covolume, the 2-D staircase
 * trapezoid formula, simplex grid search for the integrability index, and
 * exact bisection along the diagonal.  They are part of the library (not
 * test-only) so the CLI can emit cross-checked reports; the test suites
 * and acceptance criteria are built on them.
 */

#ifndef TROPSING_ORACLE_HPP
#define TROPSING_ORACLE_HPP

#include "tropsing/polyhedron.hpp"
#include "tropsing/rational.hpp"

#include <cstdint>

namespace tropsing::oracle {

struct OracleEstimate {
  double value = 0;
  double standard_error = 0;
  std::int64_t samples = 0;
};

/// Uniform sampling of [0,M]^n with the same clipping box M as the exact
/// covolume; a hit is a point outside Gamma.  Membership is tested on the
/// facet inequalities in floating point, falling back to the exact
/// rational LP within 1e-9 relative distance of any facet.  Sampling is
/// counter-based on (seed, sample, coordinate), so any execution schedule
/// produces bit-identical estimates.  Requires finite covolume.
OracleEstimate mc_covol(const NewtonPolyhedron& gamma, std::int64_t samples,
                        std::uint64_t seed);

/// Exact n=2 covolume: trapezoid sums under the staircase chain of
/// vertices sorted by the first coordinate.  Requires finite covolume.
Rat staircase_covol_2d(const NewtonPolyhedron& gamma);

struct GridEstimate {
  Rat value;       // max over the grid of min_v <a, v>; a lower bound
  Rat resolution;  // Lipschitz gap: max_v |v|_1 / k
  std::int64_t samples = 0;
  RatVec argmax;
};

/// Evaluates min_v <a, v> on every rational simplex point with denominator
/// k.  Guarantees value <= lambda_indicator <= value + resolution.
GridEstimate grid_lambda(const NewtonPolyhedron& gamma, int k);

/// min{t : t*(1,...,1) in Gamma} by exact bisection on rational member()
/// queries, snapped to the enclosed rational.  Independent of both the
/// lambda LP and the facet route.
Rat diagonal_entry_bisect(const NewtonPolyhedron& gamma, int iterations = 128);

}  // namespace tropsing::oracle

#endif  // TROPSING_ORACLE_HPP
