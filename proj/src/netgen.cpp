#include "fdwpcn/netgen.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fdwpcn {

namespace {

// Fixed transforms over the raw 64-bit stream so instances do not depend on
// the standard library's distribution implementations.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      const double z = *spare_;
      spare_.reset();
      return z;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
  }

  // Open interval (0, 1) so that fading never zeroes a gain.
  double open_uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  double exponential() { return -std::log(open_uniform()); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace

void GenConfig::check() const {
  if (n_users < 1) throw ConfigError("n_users must be at least 1");
  if (!(radius > 0)) throw ConfigError("radius must be positive");
  if (!(ref_distance > 0)) throw ConfigError("ref_distance must be positive");
  if (!(shadow_sigma_db >= 0)) throw ConfigError("shadow_sigma_db must be nonnegative");
  if (!(demand_bits > 0)) throw ConfigError("demand_bits must be positive");
  if (!(initial_energy_max >= 0)) throw ConfigError("initial_energy_max must be nonnegative");
  if (fixed_distance && !(*fixed_distance > 0)) throw ConfigError("fixed_distance must be positive");
  try {
    system.check();
  } catch (const InvalidParamsError& e) {
    throw ConfigError(e.what());
  }
}

double path_loss_db(const GenConfig& config, double distance, double shadow_db) {
  const double d = std::max(distance, config.ref_distance);
  return config.ref_loss_db + 10.0 * config.path_loss_exp * std::log10(d / config.ref_distance) +
         shadow_db;
}

double mean_gain(const GenConfig& config, double distance) {
  return std::pow(10.0, -path_loss_db(config, distance, 0.0) / 10.0);
}

SampledNetwork sample_with_geometry(const GenConfig& config) {
  config.check();
  Stream rng(config.seed);
  SampledNetwork out;
  out.instance.params = config.system;
  out.instance.users.reserve(config.n_users);
  out.distances.reserve(config.n_users);

  auto link_gain = [&](double d) {
    const double z = config.shadow_sigma_db * rng.normal();
    double g = std::pow(10.0, -path_loss_db(config, d, z) / 10.0);
    if (config.fading) g *= rng.exponential();
    return g;
  };

  for (std::size_t i = 0; i < config.n_users; ++i) {
    const double d = config.fixed_distance ? *config.fixed_distance
                                           : config.radius * std::sqrt(rng.uniform());
    UserProfile user;
    user.uplink_gain = link_gain(d);
    user.downlink_gain = link_gain(d);
    user.demand_bits = config.demand_bits;
    user.initial_energy = config.initial_energy_max > 0 ? config.initial_energy_max * rng.uniform() : 0.0;
    out.instance.users.push_back(user);
    out.distances.push_back(d);
  }
  return out;
}

NetworkInstance sample(const GenConfig& config) { return sample_with_geometry(config).instance; }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed ^ (trial * 0x9E3779B97F4A7C15ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace fdwpcn
