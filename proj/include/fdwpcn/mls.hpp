#pragma once

#include <cstddef>
#include <vector>

#include "fdwpcn/enumerate.hpp"
#include "fdwpcn/model.hpp"

namespace fdwpcn {

struct MlsSolution {
  Schedule schedule;
  double length = 0.0;  // tau0 + sum of slot durations
};

// Optimal minimum-length schedule: every user sends exactly its demand and
// users go in nondecreasing order of earliest start time (ties by index).
MlsSolution mlsa(const NetworkInstance& instance);

// Shortest schedule that keeps the given order. All waiting that energy
// causality forces is collected into the leading tau0.
MlsSolution fixed_order_mls(const NetworkInstance& instance, const std::vector<std::size_t>& order);

// Fixed natural order 0..N-1.
MlsSolution pdo(const NetworkInstance& instance);

// Minimum of fixed_order_mls over every order (N <= 8), lexicographically
// first order on ties.
MlsSolution brute_force_mls(const NetworkInstance& instance,
                            Execution exec = Execution::parallel);

// s_min of every user; throws InfeasibleError for the first stranded user.
std::vector<double> start_times(const NetworkInstance& instance);

}  // namespace fdwpcn
