/**
 * Exact rational linear programming by the two-phase primal simplex method
 * with Bland's pivoting rule.  Bland's rule never cycles, and every problem
 * in this library is tiny (variables and constraints in the tens), so the
 * dense tableau over mpq scalars is the whole story.
 */

#ifndef TROPSING_LP_HPP
#define TROPSING_LP_HPP

#include "tropsing/rational.hpp"

#include <vector>

namespace tropsing::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rat value;  // objective at the optimum (minimization)
  RatVec x;   // values of the original variables
  bool optimal() const { return status == Status::optimal; }
};

/// min c'x  subject to  constraint rows over x >= 0.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars) : num_vars_(num_vars) {}

  void add_eq(const RatVec& row, const Rat& rhs) { add(row, rhs, 0); }
  void add_ge(const RatVec& row, const Rat& rhs) { add(row, rhs, 1); }
  void add_le(const RatVec& row, const Rat& rhs) { add(row, rhs, -1); }

  Result minimize(const RatVec& cost) const;
  Result maximize(const RatVec& cost) const;

  /// Phase-1 feasibility only.
  bool feasible() const;

 private:
  void add(const RatVec& row, const Rat& rhs, int sense);
  struct Row {
    RatVec coeffs;
    Rat rhs;
    int sense;  // 0 eq, +1 >=, -1 <=
  };
  int num_vars_;
  std::vector<Row> rows_;
};

}  // namespace tropsing::lp

#endif  // TROPSING_LP_HPP
