#include "tropsing/lp.hpp"

#include "tropsing/errors.hpp"

#include <cassert>

namespace tropsing::lp {

namespace {

// Dense two-phase tableau.  Columns: structural + slack/surplus variables,
// then one artificial per row, then the right-hand side.  Rows: one per
// constraint, then the phase-2 cost row, then the phase-1 cost row.
class Tableau {
 public:
  Tableau(const RatMat& a, const RatVec& b, const RatVec& c)
      : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())) {
    t_ = RatMat::Zero(m_ + 2, n_ + m_ + 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      Rat sign = b(i) < 0 ? Rat(-1) : Rat(1);
      for (int j = 0; j < n_; ++j) t_(i, j) = sign * a(i, j);
      t_(i, rhs()) = sign * b(i);
      t_(i, n_ + i) = 1;  // artificial
      basis_[i] = n_ + i;
    }
    for (int j = 0; j < n_; ++j) t_(z(), j) = c(j);
    // Phase-1 costs priced out against the artificial basis.
    for (int j = 0; j <= n_ + m_; ++j) {
      if (j >= n_ && j < n_ + m_) continue;
      Rat s = 0;
      for (int i = 0; i < m_; ++i) s += t_(i, j);
      t_(w(), j) = -s;
    }
  }

  Status solve(RatVec* x_out, Rat* value_out, const RatVec& c) {
    run_phase(w());
    if (t_(w(), rhs()) != 0) return Status::infeasible;
    evict_artificials();
    if (!run_phase(z())) return Status::unbounded;
    RatVec x = RatVec::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (!dead_[i] && basis_[i] < n_) x(basis_[i]) = t_(i, rhs());
    *x_out = x;
    *value_out = c.dot(x);
    return Status::optimal;
  }

 private:
  int rhs() const { return n_ + m_; }
  int z() const { return m_; }
  int w() const { return m_ + 1; }

  bool artificial(int col) const { return col >= n_ && col < n_ + m_; }

  void pivot(int row, int col) {
    Rat p = t_(row, col);
    t_.row(row) /= p;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      t_.row(i) -= t_(i, col) * t_.row(row);
    }
    basis_[row] = col;
  }

  // Bland's rule: entering = lowest-index column with negative reduced
  // cost; leaving = lowest basis index among the minimum-ratio rows.
  // Returns false on unboundedness.
  bool run_phase(int cost_row) {
    const bool phase2 = cost_row == z();
    if (dead_.empty()) dead_.assign(m_, false);
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n_ + m_; ++j) {
        if (phase2 && artificial(j)) continue;
        if (t_(cost_row, j) < 0) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (dead_[i] || t_(i, enter) <= 0) continue;
        Rat ratio = t_(i, rhs()) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  // After phase 1 every artificial is at value zero; pivot each one out on
  // a structural column, or retire its row as redundant.
  void evict_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (dead_[i] || !artificial(basis_[i])) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (t_(i, j) != 0) { col = j; break; }
      if (col >= 0)
        pivot(i, col);
      else
        dead_[i] = true;
    }
  }

  int m_, n_;
  RatMat t_;
  std::vector<int> basis_;
  std::vector<bool> dead_;
};

}  // namespace

void LinearProgram::add(const RatVec& row, const Rat& rhs, int sense) {
  if (row.size() != num_vars_) throw DomainError("LinearProgram: row size mismatch");
  rows_.push_back({row, rhs, sense});
}

Result LinearProgram::minimize(const RatVec& cost) const {
  if (cost.size() != num_vars_) throw DomainError("LinearProgram: cost size mismatch");
  const int m = static_cast<int>(rows_.size());
  int extra = 0;
  for (const Row& r : rows_)
    if (r.sense != 0) ++extra;

  RatMat a = RatMat::Zero(m, num_vars_ + extra);
  RatVec b(m);
  RatVec c = RatVec::Zero(num_vars_ + extra);
  c.head(num_vars_) = cost;
  int next = num_vars_;
  for (int i = 0; i < m; ++i) {
    a.row(i).head(num_vars_) = rows_[i].coeffs.transpose();
    b(i) = rows_[i].rhs;
    if (rows_[i].sense > 0) a(i, next++) = -1;  // surplus
    if (rows_[i].sense < 0) a(i, next++) = 1;   // slack
  }

  Tableau tab(a, b, c);
  Result res;
  RatVec x;
  res.status = tab.solve(&x, &res.value, c);
  if (res.status == Status::optimal) res.x = x.head(num_vars_);
  return res;
}

Result LinearProgram::maximize(const RatVec& cost) const {
  Result res = minimize(RatVec(-cost));
  if (res.status == Status::optimal) res.value = -res.value;
  // Unbounded below in the negated problem means unbounded above here.
  return res;
}

bool LinearProgram::feasible() const {
  return minimize(RatVec::Zero(num_vars_)).status != Status::infeasible;
}

}  // namespace tropsing::lp
