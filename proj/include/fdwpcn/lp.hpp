#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fdwpcn::lp {

// maximize c.x subject to A x <= b, x >= 0. A is row-major m x n.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> constraint_matrix;
  std::vector<double> rhs;

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_constraints() const noexcept { return rhs.size(); }
  // Throws std::invalid_argument on ragged or non-finite input.
  void check() const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
};

// No usable pivot above the pivot tolerance where one is needed.
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kPivotTolerance = 1e-11;

// Two-phase dense tableau simplex with Bland's rule.
LpSolution solve(const LpProblem& problem);

const char* to_string(LpStatus status);

}  // namespace fdwpcn::lp
