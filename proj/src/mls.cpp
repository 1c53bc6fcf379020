#include "fdwpcn/mls.hpp"

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

// Closed form over precomputed terms:
// tau0 = max(0, max_p (s_p - sum_{q<p} tau_q)).
MlsSolution pack_order(const std::vector<double>& earliest, const std::vector<double>& durations,
                       const std::vector<std::size_t>& order) {
  double tau0 = 0.0;
  double before = 0.0;
  for (auto u : order) {
    tau0 = std::max(tau0, earliest[u] - before);
    before += durations[u];
  }
  std::vector<std::pair<std::size_t, double>> allocation;
  allocation.reserve(order.size());
  for (auto u : order) allocation.emplace_back(u, durations[u]);
  MlsSolution out;
  out.schedule = Schedule::pack(tau0, allocation);
  out.length = out.schedule.length();
  return out;
}

std::vector<double> durations_of(const NetworkInstance& instance) {
  std::vector<double> d;
  d.reserve(instance.size());
  for (const auto& u : instance.users) d.push_back(tau_min(instance.params, u));
  return d;
}

}  // namespace

std::vector<double> start_times(const NetworkInstance& instance) {
  std::vector<double> s;
  s.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i)
    s.push_back(s_min(instance.params, instance.users[i], i));
  return s;
}

MlsSolution mlsa(const NetworkInstance& instance) {
  instance.check();
  const auto earliest = start_times(instance);
  const auto durations = durations_of(instance);

  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // One stable sort replaces the repeated argmin; same order, O(N log N).
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return earliest[a] < earliest[b]; });

  double elapsed = 0.0;
  double tau0 = 0.0;
  std::vector<std::pair<std::size_t, double>> allocation;
  allocation.reserve(order.size());
  for (auto m : order) {
    const double waiting = std::max(0.0, earliest[m] - elapsed);
    tau0 += waiting;
    elapsed += durations[m] + waiting;
    allocation.emplace_back(m, durations[m]);
  }
  MlsSolution out;
  out.schedule = Schedule::pack(tau0, allocation);
  out.length = out.schedule.length();
  return out;
}

MlsSolution fixed_order_mls(const NetworkInstance& instance, const std::vector<std::size_t>& order) {
  instance.check();
  check_order(instance.size(), order);
  return pack_order(start_times(instance), durations_of(instance), order);
}

MlsSolution pdo(const NetworkInstance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return fixed_order_mls(instance, order);
}

MlsSolution brute_force_mls(const NetworkInstance& instance, Execution exec) {
  instance.check();
  if (instance.size() > kMaxEnumerationUsers)
    throw TooLargeError("brute_force_mls supports at most 8 users, got " +
                        std::to_string(instance.size()));
  const auto earliest = start_times(instance);
  const auto durations = durations_of(instance);
  auto best = best_order(
      instance.size(), exec,
      [&](const std::vector<std::size_t>& order) { return pack_order(earliest, durations, order); },
      [](const MlsSolution& s) { return -s.length; });
  return best.result;
}

}  // namespace fdwpcn
