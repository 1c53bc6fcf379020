#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdwpcn/errors.hpp"

namespace fdwpcn {

// HAP- and channel-wide constants. Units are SI throughout.
struct SystemParams {
  double p_h = 1.0;             // HAP broadcast power [W]
  double p_max = 0.1;           // user on-state transmit power [W]
  double bandwidth = 1e6;       // [Hz]
  double noise_density = 3.981071705534972e-21;  // -174 dBm/Hz in W/Hz
  double self_interference = 1e-7;               // -70 dB, linear
  double eh_saturation = 0.02337;                // P_s [W]
  double eh_slope = 150.0;                       // logistic steepness [1/W]
  double eh_threshold = 0.014;                   // logistic turn-on [W]

  // Throws InvalidParamsError on the first violated invariant.
  void check() const;
};

struct UserProfile {
  double uplink_gain = 0.0;    // user -> HAP power gain
  double downlink_gain = 0.0;  // HAP -> user power gain
  double initial_energy = 0.0; // battery at frame start [J]
  double demand_bits = 100.0;
  // Per-circuit overrides of the shared harvester constants.
  std::optional<double> eh_slope;
  std::optional<double> eh_threshold;

  void check() const;
};

struct NetworkInstance {
  SystemParams params;
  std::vector<UserProfile> users;

  std::size_t size() const noexcept { return users.size(); }
  void check() const;
};

struct Slot {
  std::size_t user = 0;  // zero-based index into NetworkInstance::users
  double start = 0.0;
  double duration = 0.0;

  double end() const noexcept { return start + duration; }
};

// A harvest-only lead-in of length tau0 followed by back-to-back slots.
struct Schedule {
  double tau0 = 0.0;
  std::vector<Slot> slots;

  double length() const noexcept {
    return slots.empty() ? tau0 : slots.back().end();
  }
  double busy_time() const noexcept;

  // Builds contiguous slots from (user, duration) pairs starting at tau0.
  static Schedule pack(double tau0, const std::vector<std::pair<std::size_t, double>>& allocation);
};

struct FeasibilityReport {
  std::vector<bool> energy_ok;   // per user; unscheduled users are trivially ok
  std::vector<bool> traffic_ok;  // per user; all true when traffic is not checked
  double length = 0.0;
  double throughput = 0.0;       // bits delivered, sum of duration * rate

  bool all_ok() const noexcept;
};

inline constexpr double kEnergyTolerance = 1e-12;   // J
inline constexpr double kTrafficTolerance = 1e-9;   // bits

// SNR per watt of transmit power at the HAP: g / (N0 W + beta P_h).
double snr_coefficient(const SystemParams& params, const UserProfile& user);

// Shannon rate at P_max [bit/s].
double rate(const SystemParams& params, const UserProfile& user);

// Logistic harvester output normalised so that zero input yields zero
// output and large input saturates at P_s [W].
double harvest_rate(const SystemParams& params, const UserProfile& user);

// Shortest slot that carries the user's whole demand [s].
double tau_min(const SystemParams& params, const UserProfile& user);

// Energy spent by a tau_min slot at P_max [J].
double energy_required(const SystemParams& params, const UserProfile& user);

// Earliest start time at which the battery plus harvest covers a tau_min
// slot. Negative values mean the user is ready before the frame starts.
// Throws InfeasibleError when the user harvests nothing and its battery
// falls short.
double s_min(const SystemParams& params, const UserProfile& user, std::size_t index = 0);

// Per-user quantities derived once from the closed forms above.
struct UserTerms {
  double rate = 0.0;
  double harvest = 0.0;
  double tau_min = 0.0;
  double energy = 0.0;
};

UserTerms user_terms(const SystemParams& params, const UserProfile& user);

// Replays a schedule against energy causality (and, optionally, each user's
// demand). Energy is checked at every slot's completion: during a slot the
// battery moves linearly at rate C - P_max, so if it drains the minimum
// sits at the end, and if it grows the start level B + C*start is already
// nonnegative. Throws MalformedScheduleError for overlapping, gapped or
// duplicated slots, negative durations or unknown users.
FeasibilityReport validate(const NetworkInstance& instance, const Schedule& schedule,
                           bool check_traffic);

}  // namespace fdwpcn
