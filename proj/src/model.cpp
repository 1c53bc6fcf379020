#include "fdwpcn/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fdwpcn {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParamsError(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void SystemParams::check() const {
  require(finite(p_h) && p_h > 0, "p_h must be positive");
  require(finite(p_max) && p_max > 0, "p_max must be positive");
  require(finite(bandwidth) && bandwidth > 0, "bandwidth must be positive");
  require(finite(noise_density) && noise_density >= 0, "noise_density must be nonnegative");
  require(finite(self_interference) && self_interference >= 0,
          "self_interference must be nonnegative");
  require(noise_density * bandwidth + self_interference * p_h > 0,
          "noise plus self-interference must be positive");
  require(finite(eh_saturation) && eh_saturation > 0, "eh_saturation must be positive");
  require(finite(eh_slope) && eh_slope > 0, "eh_slope must be positive");
  require(finite(eh_threshold) && eh_threshold >= 0, "eh_threshold must be nonnegative");
}

void UserProfile::check() const {
  require(finite(uplink_gain) && uplink_gain > 0, "uplink_gain must be positive");
  require(finite(downlink_gain) && downlink_gain > 0, "downlink_gain must be positive");
  require(finite(initial_energy) && initial_energy >= 0, "initial_energy must be nonnegative");
  require(finite(demand_bits) && demand_bits > 0, "demand_bits must be positive");
  if (eh_slope) require(finite(*eh_slope) && *eh_slope > 0, "eh_slope must be positive");
  if (eh_threshold)
    require(finite(*eh_threshold) && *eh_threshold >= 0, "eh_threshold must be nonnegative");
}

void NetworkInstance::check() const {
  params.check();
  require(!users.empty(), "instance needs at least one user");
  for (const auto& u : users) u.check();
}

double Schedule::busy_time() const noexcept {
  double total = 0.0;
  for (const auto& s : slots) total += s.duration;
  return total;
}

Schedule Schedule::pack(double tau0,
                        const std::vector<std::pair<std::size_t, double>>& allocation) {
  Schedule out;
  out.tau0 = tau0;
  out.slots.reserve(allocation.size());
  double t = tau0;
  for (const auto& [user, duration] : allocation) {
    out.slots.push_back({user, t, duration});
    t += duration;
  }
  return out;
}

bool FeasibilityReport::all_ok() const noexcept {
  for (bool b : energy_ok)
    if (!b) return false;
  for (bool b : traffic_ok)
    if (!b) return false;
  return true;
}

double snr_coefficient(const SystemParams& params, const UserProfile& user) {
  const double denom = params.noise_density * params.bandwidth + params.self_interference * params.p_h;
  if (!(denom > 0)) throw InvalidParamsError("noise plus self-interference must be positive");
  return user.uplink_gain / denom;
}

double rate(const SystemParams& params, const UserProfile& user) {
  // log1p keeps full precision for weak links where k P_max << 1.
  return params.bandwidth * std::log1p(snr_coefficient(params, user) * params.p_max) /
         std::numbers::ln2;
}

double harvest_rate(const SystemParams& params, const UserProfile& user) {
  const double a = user.eh_slope.value_or(params.eh_slope);
  const double b = user.eh_threshold.value_or(params.eh_threshold);
  const double input = user.downlink_gain * params.p_h;
  // (Psi - Omega) / (1 - Omega) with Psi = 1/(1+e^{-a(x-b)}), Omega = 1/(1+e^{ab})
  // reduces to (1 - e^{-ax}) / (1 + e^{a(b-x)}), which is exact at x = 0.
  const double rise = -std::expm1(-a * input);
  const double gate = 1.0 + std::exp(a * (b - input));
  return params.eh_saturation * rise / gate;
}

double tau_min(const SystemParams& params, const UserProfile& user) {
  return user.demand_bits / rate(params, user);
}

double energy_required(const SystemParams& params, const UserProfile& user) {
  return tau_min(params, user) * params.p_max;
}

double s_min(const SystemParams& params, const UserProfile& user, std::size_t index) {
  const double tau = tau_min(params, user);
  const double energy = tau * params.p_max;
  const double harvest = harvest_rate(params, user);
  if (harvest > 0) return (energy - user.initial_energy - tau * harvest) / harvest;
  if (user.initial_energy >= energy) return -tau;
  throw InfeasibleError(index, "user " + std::to_string(index + 1) +
                                   " harvests no energy and its battery cannot cover its demand");
}

UserTerms user_terms(const SystemParams& params, const UserProfile& user) {
  UserTerms t;
  t.rate = rate(params, user);
  t.harvest = harvest_rate(params, user);
  t.tau_min = user.demand_bits / t.rate;
  t.energy = t.tau_min * params.p_max;
  return t;
}

FeasibilityReport validate(const NetworkInstance& instance, const Schedule& schedule,
                           bool check_traffic) {
  const std::size_t n = instance.size();
  FeasibilityReport report;
  report.energy_ok.assign(n, true);
  report.traffic_ok.assign(n, true);

  if (!(schedule.tau0 >= 0)) throw MalformedScheduleError("tau0 must be nonnegative");
  std::vector<bool> seen(n, false);
  double expected_start = schedule.tau0;
  for (const auto& slot : schedule.slots) {
    if (slot.user >= n)
      throw MalformedScheduleError("slot references unknown user " + std::to_string(slot.user + 1));
    if (seen[slot.user])
      throw MalformedScheduleError("user " + std::to_string(slot.user + 1) + " scheduled twice");
    seen[slot.user] = true;
    if (!(slot.duration >= 0)) throw MalformedScheduleError("negative slot duration");
    const double slack = 1e-12 * std::max(1.0, std::abs(expected_start));
    if (std::abs(slot.start - expected_start) > slack)
      throw MalformedScheduleError("slots are not contiguous");
    expected_start = slot.end();
  }

  const auto& p = instance.params;
  for (const auto& slot : schedule.slots) {
    const auto& user = instance.users[slot.user];
    const UserTerms t = user_terms(p, user);
    const double level = user.initial_energy + t.harvest * slot.end() - p.p_max * slot.duration;
    if (level < -kEnergyTolerance) report.energy_ok[slot.user] = false;
    const double bits = slot.duration * t.rate;
    report.throughput += bits;
    if (check_traffic && bits < user.demand_bits - kTrafficTolerance)
      report.traffic_ok[slot.user] = false;
  }
  if (check_traffic)
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) report.traffic_ok[i] = false;

  report.length = schedule.length();
  return report;
}

}  // namespace fdwpcn
