#pragma once

#include <cstddef>
#include <vector>

#include "fdwpcn/enumerate.hpp"
#include "fdwpcn/lp.hpp"
#include "fdwpcn/model.hpp"

namespace fdwpcn {

// Single frame of unit length. Users with zero airtime get no slot.
struct StmSolution {
  Schedule schedule;
  double throughput = 0.0;              // bits per frame
  std::vector<double> airtime;          // per user, zero when unscheduled
  std::vector<std::size_t> scheduled_users;
};

// Max-rate-first heuristic. Users are taken in decreasing rate order (ties
// by index) and each is placed as late as possible in the still-free head
// of the frame, receiving as much time as its battery plus harvest allows.
StmSolution mrsa(const NetworkInstance& instance);

// The LP for a fixed order: maximise sum r_i tau_i subject to the unit frame
// and per-user energy causality, with tau0 as a free leading gap.
lp::LpProblem stm_order_lp(const NetworkInstance& instance, const std::vector<std::size_t>& order);

StmSolution fixed_order_stm(const NetworkInstance& instance, const std::vector<std::size_t>& order);

// Best fixed_order_stm over every order (N <= 8).
StmSolution brute_force_stm(const NetworkInstance& instance,
                            Execution exec = Execution::parallel);

// Raised when the per-order LP does not report an optimum.
class LpFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdwpcn
