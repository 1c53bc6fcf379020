#include "fdwpcn/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fdwpcn::lp {

namespace {

constexpr double kOptimalityTolerance = 1e-11;
// Column entries at or below this are rounding noise, not pivots.
constexpr double kNoiseFloor = 1e-13;
constexpr std::size_t kIterationLimit = 100000;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<double>(cols + 1, 0.0)), basis_(rows, 0),
        objective_(cols + 1, 0.0), allowed_(cols, true) {}

  std::vector<double>& row(std::size_t i) { return cells_[i]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  double& rhs(std::size_t i) { return cells_[i][cols_]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::vector<double>& objective() { return objective_; }
  void forbid(std::size_t j) { allowed_[j] = false; }

  // Objective row holds reduced costs c_j - z_j and, in the last cell, -z.
  void price(const std::vector<double>& cost) {
    std::fill(objective_.begin(), objective_.end(), 0.0);
    for (std::size_t j = 0; j < cols_; ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) objective_[j] -= cb * cells_[i][j];
    }
  }

  double value() const { return -objective_[cols_]; }

  void pivot(std::size_t r, std::size_t e) {
    auto& pr = cells_[r];
    const double p = pr[e];
    for (auto& v : pr) v /= p;
    pr[e] = 1.0;
    auto eliminate = [&](std::vector<double>& target) {
      const double f = target[e];
      if (f == 0.0) return;
      for (std::size_t j = 0; j <= cols_; ++j) target[j] -= f * pr[j];
      target[e] = 0.0;
    };
    for (std::size_t i = 0; i < rows(); ++i)
      if (i != r) eliminate(cells_[i]);
    eliminate(objective_);
    basis_[r] = e;
  }

  // Bland's rule to optimality. Returns false when unbounded.
  bool optimise() {
    for (std::size_t iter = 0; iter < kIterationLimit; ++iter) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && objective_[j] > kOptimalityTolerance) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return true;

      std::size_t leaving = rows();
      double best = std::numeric_limits<double>::infinity();
      bool tiny_candidate = false;
      for (std::size_t i = 0; i < rows(); ++i) {
        const double a = cells_[i][entering];
        if (a <= kPivotTolerance) {
          if (a > kNoiseFloor) tiny_candidate = true;
          continue;
        }
        const double ratio = std::max(0.0, cells_[i][cols_]) / a;
        const double slack = 1e-12 * (1.0 + std::abs(best));
        if (leaving == rows() || ratio < best - slack ||
            (ratio <= best + slack && basis_[i] < basis_[leaving])) {
          if (leaving == rows() || ratio < best - slack) best = ratio;
          leaving = i;
        }
      }
      if (leaving == rows()) {
        if (tiny_candidate)
          throw NumericalBreakdown("simplex: only sub-tolerance pivots in entering column");
        return false;
      }
      pivot(leaving, entering);
    }
    throw NumericalBreakdown("simplex: iteration limit reached");
  }

  void drop_row(std::size_t i) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<double> objective_;
  std::vector<bool> allowed_;
};

}  // namespace

void LpProblem::check() const {
  if (constraint_matrix.size() != rhs.size())
    throw std::invalid_argument("constraint matrix rows must match rhs length");
  for (const auto& r : constraint_matrix) {
    if (r.size() != objective.size())
      throw std::invalid_argument("constraint row length must match objective length");
    for (double v : r)
      if (!std::isfinite(v)) throw std::invalid_argument("constraint matrix must be finite");
  }
  for (double v : objective)
    if (!std::isfinite(v)) throw std::invalid_argument("objective must be finite");
  for (double v : rhs)
    if (!std::isfinite(v)) throw std::invalid_argument("rhs must be finite");
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

LpSolution solve(const LpProblem& problem) {
  problem.check();
  const std::size_t n = problem.num_vars();
  const std::size_t m = problem.num_constraints();

  std::size_t artificials = 0;
  for (double b : problem.rhs)
    if (b < 0) ++artificials;
  const std::size_t cols = n + m + artificials;
  Tableau t(m, cols);

  // Rows are equilibrated to unit max coefficient; x is unaffected.
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = problem.constraint_matrix[i];
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) scale = 1.0;
    const double sign = problem.rhs[i] < 0 ? -1.0 : 1.0;
    auto& row = t.row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] = sign * a[j] / scale;
    row[n + i] = sign / scale;
    t.rhs(i) = sign * problem.rhs[i] / scale;
    if (sign < 0) {
      row[next_art] = 1.0;
      t.basic(i) = next_art++;
    } else {
      t.basic(i) = n + i;
    }
  }

  LpSolution out;
  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = n + m; j < cols; ++j) phase1[j] = -1.0;
    t.price(phase1);
    t.optimise();  // bounded above by zero
    if (t.value() < -kFeasibilityTolerance) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (t.basic(i) < n + m) continue;
      std::size_t col = n + m;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (std::abs(t.row(i)[j]) > kPivotTolerance) {
          col = j;
          break;
        }
      }
      if (col == n + m)
        t.drop_row(i);
      else
        t.pivot(i, col);
    }
    for (std::size_t j = n + m; j < cols; ++j) t.forbid(j);
  }

  double cscale = 0.0;
  for (double c : problem.objective) cscale = std::max(cscale, std::abs(c));
  if (cscale == 0.0) cscale = 1.0;
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j] / cscale;
  t.price(cost);
  if (!t.optimise()) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basic(i) < n) out.x[t.basic(i)] = std::max(0.0, t.rhs(i));
  out.objective_value = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.objective_value += problem.objective[j] * out.x[j];
  return out;
}

}  // namespace fdwpcn::lp
