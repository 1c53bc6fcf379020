#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "fdwpcn/netgen.hpp"

namespace fdwpcn::testing {

inline bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Draws from the simulation model with a varied battery and HAP/user powers
// so that both empty-battery and battery-rich users show up.
inline NetworkInstance random_instance(std::uint64_t seed, std::size_t n_users) {
  std::mt19937_64 rng(seed * 7919 + 17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GenConfig c;
  c.n_users = n_users;
  c.seed = seed;
  c.system.p_h = 0.5 + 7.5 * unit(rng);
  c.system.p_max = std::pow(10.0, -2.0 + 2.0 * unit(rng));
  c.initial_energy_max = unit(rng) < 0.5 ? 0.0 : std::pow(10.0, -7.0 + 3.0 * unit(rng));
  return sample(c);
}

// Hand-built two-parameter user: rate W*log2(1+k*P_max) with k given
// directly (W = 1, N0 = 1e-9, no self-interference) and harvest pinned to
// the saturation value through an overwhelming input power.
inline NetworkInstance exact_instance(double p_max, double harvest) {
  NetworkInstance inst;
  inst.params.bandwidth = 1.0;
  inst.params.noise_density = 1e-9;
  inst.params.self_interference = 0.0;
  inst.params.p_max = p_max;
  inst.params.p_h = 1.0;
  inst.params.eh_saturation = harvest;
  return inst;
}

}  // namespace fdwpcn::testing
