#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fdwpcn/enumerate.hpp"
#include "fdwpcn/io.hpp"
#include "fdwpcn/netgen.hpp"

namespace fdwpcn {

enum class SweepAxis { hap_power, user_power, n_users };

const char* to_string(SweepAxis axis);
SweepAxis axis_from_string(const std::string& name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::hap_power;
  std::vector<double> values;
  std::size_t trials = 100;
  GenConfig gen;
  bool run_mls = true;
  bool run_stm = true;
  bool oracle = false;

  // Throws ConfigError; an oracle run is refused when any point has N > 8.
  void check() const;
  // The generator config used at one axis value.
  GenConfig config_at(double value) const;
};

std::vector<double> default_axis_values(SweepAxis axis);

SweepSpec sweep_spec_from_json(const Json& j);
Json to_json(const SweepSpec& spec);

// NaN marks a metric that was not computed for this trial.
struct TrialResult {
  double axis_value = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool mls_infeasible = false;
  double mlsa_length;
  double pdo_length;
  double mls_opt_length;
  double mrsa_throughput;
  double opt_throughput;
  double ratio;

  TrialResult();
};

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
};

struct PointSummary {
  double axis_value = 0.0;
  std::size_t trials = 0;
  std::size_t mls_infeasible = 0;
  Summary mlsa_length;
  Summary pdo_length;
  Summary mrsa_throughput;
  Summary opt_throughput;
  Summary ratio;
  std::size_t opt_hits = 0;  // trials with ratio >= 1 - 1e-6
};

struct SweepResult {
  SweepSpec spec;
  std::vector<PointSummary> points;
  std::vector<TrialResult> trials;  // point-major, trial-minor
};

// Solves one realisation with every enabled algorithm; every schedule is
// replayed through validate and a failure throws std::logic_error.
TrialResult run_trial(const SweepSpec& spec, double axis_value, std::size_t trial);

// Trials are spread over OpenMP threads in the parallel kernel; the serial
// kernel is the reference. Aggregation happens afterwards in trial order,
// so both produce bit-identical results.
SweepResult run_sweep(const SweepSpec& spec, Execution exec = Execution::parallel);

Summary summarize(const std::vector<double>& values);

inline constexpr double kExactHitTolerance = 1e-6;

const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& out, const SweepResult& result);
void write_raw_jsonl(std::ostream& out, const SweepResult& result);

}  // namespace fdwpcn
