#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdwpcn/model.hpp"

namespace fdwpcn {

// Random deployment: users uniform over a disc around the HAP,
// log-distance path loss with log-normal shadowing, Rayleigh fading.
struct GenConfig {
  std::size_t n_users = 4;
  double radius = 10.0;          // m
  double ref_distance = 1.0;     // d0, m
  double ref_loss_db = 30.0;     // PL(d0), dB
  double path_loss_exp = 2.76;
  double shadow_sigma_db = 4.0;
  double demand_bits = 100.0;
  double initial_energy_max = 0.0;  // battery ~ U[0, max] J; 0 gives empty batteries
  bool fading = true;               // false exposes the mean path-loss gain
  std::optional<double> fixed_distance;  // place every user at this range
  SystemParams system;
  std::uint64_t seed = 1;

  void check() const;
};

// Name of the generator and transforms, recorded with emitted instances.
inline constexpr const char* kRngName =
    "mt19937_64; uniform=(x>>11)*2^-53; normal=box-muller; exponential=-log(((x>>11)+0.5)*2^-53)";

// Path loss in dB at range d with shadowing term z (dB). Ranges inside the
// reference distance are evaluated at d0.
double path_loss_db(const GenConfig& config, double distance, double shadow_db);

// Mean linear power gain at range d without shadowing.
double mean_gain(const GenConfig& config, double distance);

struct SampledNetwork {
  NetworkInstance instance;
  std::vector<double> distances;
};

SampledNetwork sample_with_geometry(const GenConfig& config);
NetworkInstance sample(const GenConfig& config);

// Seed of trial k of a Monte Carlo run: splitmix64(seed ^ (k * golden gamma)).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace fdwpcn
