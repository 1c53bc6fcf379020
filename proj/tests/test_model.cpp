#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fdwpcn/model.hpp"
#include "support.hpp"

using namespace fdwpcn;
using fdwpcn::testing::near_rel;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// 50-digit recomputation of the closed forms, written the long way round
// (logistic difference divided by its complement) rather than through the
// library's expm1 rearrangement.
struct BigTerms {
  Big k, rate, harvest, tau, energy, start;
};

BigTerms big_terms(const SystemParams& p, const UserProfile& u) {
  BigTerms t;
  const Big denom = Big(p.noise_density) * Big(p.bandwidth) + Big(p.self_interference) * Big(p.p_h);
  t.k = Big(u.uplink_gain) / denom;
  t.rate = Big(p.bandwidth) * log(Big(1) + t.k * Big(p.p_max)) / log(Big(2));
  const Big a = Big(u.eh_slope.value_or(p.eh_slope));
  const Big b = Big(u.eh_threshold.value_or(p.eh_threshold));
  const Big x = Big(u.downlink_gain) * Big(p.p_h);
  const Big psi = Big(1) / (Big(1) + exp(-a * (x - b)));
  const Big omega = Big(1) / (Big(1) + exp(a * b));
  t.harvest = Big(p.eh_saturation) * (psi - omega) / (Big(1) - omega);
  t.tau = Big(u.demand_bits) / t.rate;
  t.energy = t.tau * Big(p.p_max);
  t.start = (t.energy - Big(u.initial_energy) - t.tau * t.harvest) / t.harvest;
  return t;
}

double rel_err(double got, const Big& want) {
  return static_cast<double>(abs((Big(got) - want) / want));
}

}  // namespace

TEST_CASE("snr coefficient") {
  SystemParams p;
  UserProfile u{1.0, 1.0, 0.0, 100.0, {}, {}};
  p.noise_density = 0.5;
  p.bandwidth = 1.0;
  p.self_interference = 0.5;
  p.p_h = 1.0;
  CHECK(snr_coefficient(p, u) == doctest::Approx(1.0).epsilon(1e-15));

  p.noise_density = 1e-15;
  p.bandwidth = 1e6;
  p.self_interference = 1e-7;
  u.uplink_gain = 2e-6;
  const double k = snr_coefficient(p, u);
  CHECK(rel_err(k, big_terms(p, u).k) < 1e-14);
  CHECK(k == doctest::Approx(19.80198).epsilon(1e-6));

  p.self_interference = 0.0;
  u.uplink_gain = p.noise_density * p.bandwidth;
  CHECK(snr_coefficient(p, u) == doctest::Approx(1.0).epsilon(1e-15));

  p.noise_density = 0.0;
  CHECK_THROWS_AS(snr_coefficient(p, u), InvalidParamsError);
}

TEST_CASE("rate at unit and triple snr") {
  SystemParams p;
  p.bandwidth = 1e6;
  p.noise_density = 1e-15;
  p.self_interference = 0.0;
  p.p_max = 1.0;
  UserProfile u{1e-9, 1.0, 0.0, 100.0, {}, {}};
  CHECK(rate(p, u) == doctest::Approx(1e6).epsilon(1e-14));
  u.uplink_gain = 3e-9;
  CHECK(rate(p, u) == doctest::Approx(2e6).epsilon(1e-14));
  CHECK(tau_min(p, u) == doctest::Approx(5e-5).epsilon(1e-14));
  CHECK(energy_required(p, u) == doctest::Approx(5e-5).epsilon(1e-14));
}

TEST_CASE("energy required is tau_min times p_max") {
  auto inst = fdwpcn::testing::exact_instance(0.1, 1.0);
  // k * P_max = 1 gives one bit per second.
  UserProfile u{1e-8, 1.0, 0.0, 1.0, {}, {}};
  CHECK(tau_min(inst.params, u) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(energy_required(inst.params, u) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("harvest rate limits and reference point") {
  SystemParams p;
  UserProfile u{1.0, 0.0, 0.0, 100.0, {}, {}};
  CHECK(harvest_rate(p, u) == 0.0);

  u.downlink_gain = 1e9 * p.eh_threshold / p.p_h;
  CHECK(near_rel(harvest_rate(p, u), p.eh_saturation, 1e-9));

  p.p_h = 1.0;
  u.downlink_gain = 0.014;
  const double c = harvest_rate(p, u);
  CHECK(rel_err(c, big_terms(p, u).harvest) < 1e-13);
  CHECK(c == doctest::Approx(0.010254).epsilon(1e-4));
  CHECK(0.02337 * (0.5 - 0.10909682) / 0.89090318 == doctest::Approx(c).epsilon(1e-7));
}

TEST_CASE("harvest rate honours per-user circuit constants") {
  SystemParams p;
  UserProfile shared{1.0, 0.01, 0.0, 100.0, {}, {}};
  UserProfile custom = shared;
  custom.eh_slope = 300.0;
  custom.eh_threshold = 0.005;
  CHECK(harvest_rate(p, custom) != harvest_rate(p, shared));
  CHECK(rel_err(harvest_rate(p, custom), big_terms(p, custom).harvest) < 1e-13);
}

TEST_CASE("harvest rate is bounded and monotone in input power") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> logx(-9.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    SystemParams p;
    p.eh_slope = std::pow(10.0, 1.0 + 2.0 * std::uniform_real_distribution<double>(0, 1)(rng));
    std::vector<double> grid(200);
    for (auto& x : grid) x = std::pow(10.0, logx(rng));
    grid.push_back(0.0);
    std::sort(grid.begin(), grid.end());
    double prev = -1.0;
    for (double x : grid) {
      UserProfile u{1.0, x, 0.0, 100.0, {}, {}};
      const double c = harvest_rate(p, u);
      CHECK(c >= 0.0);
      CHECK(c <= p.eh_saturation);
      CHECK(c >= prev);
      prev = c;
    }
  }
}

TEST_CASE("s_min arithmetic") {
  // tau_min = 1 s (one bit at one bit per second), E = P_max * 1.
  auto inst = fdwpcn::testing::exact_instance(10.0, 2.0);
  UserProfile u{1e-10, 10.0, 4.0, 1.0, {}, {}};
  CHECK(harvest_rate(inst.params, u) == 2.0);
  CHECK(s_min(inst.params, u) == doctest::Approx(2.0).epsilon(1e-12));

  inst = fdwpcn::testing::exact_instance(2.0, 1.0);
  u = UserProfile{5e-10, 10.0, 5.0, 1.0, {}, {}};
  CHECK(s_min(inst.params, u) == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("s_min with a dead harvester") {
  SystemParams p;
  p.eh_threshold = 10.0;  // e^{a b} overflows: input is far below turn-on
  UserProfile u{1e-6, 1e-3, 0.0, 100.0, {}, {}};
  REQUIRE(harvest_rate(p, u) == 0.0);
  try {
    s_min(p, u, 4);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.user() == 4);
  }
  u.initial_energy = energy_required(p, u);
  CHECK(s_min(p, u) == -tau_min(p, u));
}

TEST_CASE("closed forms agree with 50-digit recomputation") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto inst = fdwpcn::testing::random_instance(seed, 1);
    auto& u = inst.users[0];
    const auto& p = inst.params;
    u.initial_energy = 0.0;  // keeps s_min free of cancellation for a relative check
    const BigTerms want = big_terms(p, u);
    CHECK(rel_err(rate(p, u), want.rate) < 1e-12);
    CHECK(rel_err(harvest_rate(p, u), want.harvest) < 1e-12);
    CHECK(rel_err(tau_min(p, u), want.tau) < 1e-12);
    CHECK(rel_err(energy_required(p, u), want.energy) < 1e-12);
    CHECK(rel_err(s_min(p, u), want.start) < 1e-12);
  }
}

TEST_CASE("s_min with batteries stays within the scale of E/C") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto inst = fdwpcn::testing::random_instance(seed, 3);
    for (const auto& u : inst.users) {
      const BigTerms want = big_terms(inst.params, u);
      const double scale = static_cast<double>((want.energy + Big(u.initial_energy)) / want.harvest);
      const double got = s_min(inst.params, u);
      CHECK(std::abs(static_cast<double>(Big(got) - want.start)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("validate single user") {
  NetworkInstance inst;
  UserProfile u{1e-6, 1e-4, 1.0, 100.0, {}, {}};
  inst.users.push_back(u);
  const double tau = tau_min(inst.params, u);
  Schedule s = Schedule::pack(0.0, {{0, tau}});
  auto report = validate(inst, s, true);
  CHECK(report.all_ok());
  CHECK(report.length == doctest::Approx(tau));
  CHECK(report.throughput == doctest::Approx(100.0).epsilon(1e-12));

  // Short slot misses the demand.
  report = validate(inst, Schedule::pack(0.0, {{0, tau / 2}}), true);
  CHECK(report.energy_ok[0]);
  CHECK_FALSE(report.traffic_ok[0]);
  CHECK(validate(inst, Schedule::pack(0.0, {{0, tau / 2}}), false).all_ok());
}

TEST_CASE("validate catches an early start") {
  auto inst = fdwpcn::testing::exact_instance(10.0, 2.0);
  inst.users.push_back(UserProfile{1e-10, 10.0, 4.0, 1.0, {}, {}});
  REQUIRE(s_min(inst.params, inst.users[0]) == doctest::Approx(2.0));
  auto report = validate(inst, Schedule::pack(0.0, {{0, 1.0}}), true);
  CHECK_FALSE(report.energy_ok[0]);
  report = validate(inst, Schedule::pack(2.0, {{0, 1.0}}), true);
  CHECK(report.energy_ok[0]);
}

TEST_CASE("validate rejects malformed schedules") {
  NetworkInstance inst;
  inst.users.assign(2, UserProfile{1e-6, 1e-4, 1.0, 100.0, {}, {}});
  Schedule dup = Schedule::pack(0.0, {{0, 1e-5}, {0, 1e-5}});
  CHECK_THROWS_AS(validate(inst, dup, false), MalformedScheduleError);

  Schedule gap = Schedule::pack(0.0, {{0, 1e-5}, {1, 1e-5}});
  gap.slots[1].start += 1e-3;
  CHECK_THROWS_AS(validate(inst, gap, false), MalformedScheduleError);

  Schedule late_first = Schedule::pack(0.5, {{0, 1e-5}});
  late_first.slots[0].start = 0.0;
  CHECK_THROWS_AS(validate(inst, late_first, false), MalformedScheduleError);

  CHECK_THROWS_AS(validate(inst, Schedule::pack(0.0, {{0, -1.0}}), false), MalformedScheduleError);
  CHECK_THROWS_AS(validate(inst, Schedule::pack(0.0, {{7, 1.0}}), false), MalformedScheduleError);

  // A user left out fails the traffic check but is not malformed.
  auto report = validate(inst, Schedule::pack(0.0, {{0, 1e-4}}), true);
  CHECK_FALSE(report.traffic_ok[1]);
}

TEST_CASE("parameter invariants") {
  SystemParams p;
  CHECK_NOTHROW(p.check());
  p.p_max = 0.0;
  CHECK_THROWS_AS(p.check(), InvalidParamsError);
  NetworkInstance empty;
  CHECK_THROWS_AS(empty.check(), InvalidParamsError);
  UserProfile u{1.0, 1.0, -1.0, 100.0, {}, {}};
  CHECK_THROWS_AS(u.check(), InvalidParamsError);
  u = UserProfile{1.0, 1.0, 0.0, 0.0, {}, {}};
  CHECK_THROWS_AS(u.check(), InvalidParamsError);
}
