#include "fdwpcn/stm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fdwpcn {

namespace {

void check_order(std::size_t n, const std::vector<std::size_t>& order) {
  if (order.size() != n) throw std::invalid_argument("order must list every user once");
  std::vector<bool> seen(n, false);
  for (auto u : order) {
    if (u >= n || seen[u]) throw std::invalid_argument("order is not a permutation");
    seen[u] = true;
  }
}

StmSolution assemble(const NetworkInstance& instance, double tau0,
                     const std::vector<std::size_t>& order, const std::vector<double>& airtime) {
  StmSolution out;
  out.airtime = airtime;
  std::vector<std::pair<std::size_t, double>> allocation;
  for (auto u : order) {
    if (airtime[u] > 0) {
      allocation.emplace_back(u, airtime[u]);
      out.scheduled_users.push_back(u);
    }
  }
  out.schedule = Schedule::pack(tau0, allocation);
  for (const auto& [u, d] : allocation) out.throughput += d * rate(instance.params, instance.users[u]);
  std::sort(out.scheduled_users.begin(), out.scheduled_users.end());
  return out;
}

}  // namespace

StmSolution mrsa(const NetworkInstance& instance) {
  instance.check();
  const auto& p = instance.params;
  const std::size_t n = instance.size();
  std::vector<double> rates(n);
  for (std::size_t i = 0; i < n; ++i) rates[i] = rate(p, instance.users[i]);

  std::vector<std::size_t> by_rate(n);
  std::iota(by_rate.begin(), by_rate.end(), std::size_t{0});
  std::stable_sort(by_rate.begin(), by_rate.end(),
                   [&](std::size_t a, std::size_t b) { return rates[a] > rates[b]; });

  std::vector<double> airtime(n, 0.0);
  double unallocated = 1.0;
  for (auto u : by_rate) {
    const auto& user = instance.users[u];
    const double energy = user.initial_energy + harvest_rate(p, user) * unallocated;
    const double tau = std::min(energy / p.p_max, unallocated);
    airtime[u] = tau;
    unallocated -= tau;
    if (unallocated <= 0.0) {
      unallocated = 0.0;
      break;
    }
  }

  // Highest rate occupies the tail of the frame, so the front-to-back
  // order is the reverse of the allocation order.
  std::vector<std::size_t> order(by_rate.rbegin(), by_rate.rend());
  return assemble(instance, unallocated, order, airtime);
}

lp::LpProblem stm_order_lp(const NetworkInstance& instance, const std::vector<std::size_t>& order) {
  instance.check();
  check_order(instance.size(), order);
  const auto& p = instance.params;
  const std::size_t n = instance.size();

  // Variable 0 is tau0, variable k+1 is the airtime of order[k].
  lp::LpProblem problem;
  problem.objective.assign(n + 1, 0.0);
  problem.constraint_matrix.assign(n + 1, std::vector<double>(n + 1, 0.0));
  problem.rhs.assign(n + 1, 0.0);

  std::fill(problem.constraint_matrix[0].begin(), problem.constraint_matrix[0].end(), 1.0);
  problem.rhs[0] = 1.0;

  for (std::size_t k = 0; k < n; ++k) {
    const auto& user = instance.users[order[k]];
    const double harvest = harvest_rate(p, user);
    problem.objective[k + 1] = rate(p, user);
    auto& row = problem.constraint_matrix[k + 1];
    // P_max tau - C (tau0 + earlier + tau) <= B
    for (std::size_t j = 0; j <= k; ++j) row[j] = -harvest;
    row[k + 1] = p.p_max - harvest;
    problem.rhs[k + 1] = user.initial_energy;
  }
  return problem;
}

StmSolution fixed_order_stm(const NetworkInstance& instance, const std::vector<std::size_t>& order) {
  const auto problem = stm_order_lp(instance, order);
  const auto solution = lp::solve(problem);
  if (solution.status != lp::LpStatus::Optimal)
    throw LpFailure(std::string("fixed-order throughput LP is ") + lp::to_string(solution.status));

  std::vector<double> airtime(instance.size(), 0.0);
  for (std::size_t k = 0; k < order.size(); ++k) airtime[order[k]] = solution.x[k + 1];
  return assemble(instance, solution.x[0], order, airtime);
}

StmSolution brute_force_stm(const NetworkInstance& instance, Execution exec) {
  instance.check();
  if (instance.size() > kMaxEnumerationUsers)
    throw TooLargeError("brute_force_stm supports at most 8 users, got " +
                        std::to_string(instance.size()));
  auto best = best_order(
      instance.size(), exec,
      [&](const std::vector<std::size_t>& order) { return fixed_order_stm(instance, order); },
      [](const StmSolution& s) { return s.throughput; });
  return best.result;
}

}  // namespace fdwpcn
