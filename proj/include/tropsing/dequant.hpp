/**
 * Numeric verification of the dequantization limit
 *
 *     psi_{log|f|}(t) = lim_m m^{-1} log|f(e^{m(t_1+i theta_1)}, ...)|,
 *
 * the support function of the Newton polyhedron as the limit of rescaled
 * log-moduli along logarithmic rays.  Everything here is double precision;
 * this is the documented wall between the exact and numeric halves of the
 * library.  Phases are sampled pseudo-randomly (deterministic from the
 * seed, keyed by grid point, scale and phase index): the limit holds along
 * generic rays, and random phases avoid resonant zero sets.
 */

#ifndef TROPSING_DEQUANT_HPP
#define TROPSING_DEQUANT_HPP

#include "tropsing/germ.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace tropsing::dequant {

struct DequantSample {
  int m = 0;
  Eigen::VectorXd t;
  int theta_count = 0;
  double value = 0;  // max over sampled phases of m^{-1} log|f|
};

/// Evaluates |f| at modulus e^{m t} over `phases` random phase vectors and
/// returns the maximum of m^{-1} log|f|.  Requires coefficients, strictly
/// negative t, m >= 1, phases >= 1.  Throws PreconditionError when every
/// sampled value is an exact zero.
DequantSample sample_Tm(const GermSupport& f, const Eigen::VectorXd& t, int m,
                        int phases, std::uint64_t seed);

struct ConvergenceRow {
  std::size_t t_index = 0;
  Eigen::VectorXd t;
  int m = 0;
  double sampled = 0;
  double exact = 0;  // support value of the Newton polyhedron at t
  double error = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double tolerance = 1e-2;
  double slack = 2.0;
  bool pass = false;
};

/// error(t, m) = |sample_Tm(...) - psi(t)| on the grid, for each m of the
/// (increasing) schedule.  PASS iff for every grid point the final error
/// is below tolerance and errors do not grow by more than the slack
/// factor across the last two schedule steps.
ConvergenceReport convergence_report(const GermSupport& f,
                                     const std::vector<Eigen::VectorXd>& grid,
                                     const std::vector<int>& m_schedule, int phases,
                                     std::uint64_t seed, double tolerance = 1e-2,
                                     double slack = 2.0);

/// The default 5-per-axis grid over [-2, -1/2]^n.
std::vector<Eigen::VectorXd> default_grid(int dim, int per_axis = 5);

}  // namespace tropsing::dequant

#endif  // TROPSING_DEQUANT_HPP
