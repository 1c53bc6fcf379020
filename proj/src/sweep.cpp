#include "fdwpcn/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>

#include "fdwpcn/mls.hpp"
#include "fdwpcn/stm.hpp"

namespace fdwpcn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_valid(const NetworkInstance& instance, const Schedule& schedule, bool traffic,
                   const char* who) {
  if (!validate(instance, schedule, traffic).all_ok())
    throw std::logic_error(std::string(who) + " produced a schedule that fails validation");
}

std::string cell(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cell(const Summary& s, double Summary::*field) {
  return s.count == 0 ? std::string() : cell(s.*field);
}

Json number_or_null(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

}  // namespace

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::hap_power: return "hap_power";
    case SweepAxis::user_power: return "user_power";
    case SweepAxis::n_users: return "n_users";
  }
  return "unknown";
}

SweepAxis axis_from_string(const std::string& name) {
  if (name == "hap_power") return SweepAxis::hap_power;
  if (name == "user_power") return SweepAxis::user_power;
  if (name == "n_users") return SweepAxis::n_users;
  throw ConfigError("unknown sweep axis '" + name + "'");
}

std::vector<double> default_axis_values(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::hap_power: return {0.5, 1, 2, 4, 8};
    case SweepAxis::user_power: return {1e-5, 1e-4, 1e-3, 0.01, 0.1, 1};
    case SweepAxis::n_users: return {2, 4, 6, 8, 10, 15, 20};
  }
  return {};
}

GenConfig SweepSpec::config_at(double value) const {
  GenConfig c = gen;
  switch (axis) {
    case SweepAxis::hap_power: c.system.p_h = value; break;
    case SweepAxis::user_power: c.system.p_max = value; break;
    case SweepAxis::n_users: c.n_users = static_cast<std::size_t>(value); break;
  }
  return c;
}

void SweepSpec::check() const {
  if (values.empty()) throw ConfigError("sweep needs at least one axis value");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!run_mls && !run_stm) throw ConfigError("sweep needs at least one problem");
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0) throw ConfigError("axis values must be positive");
    if (axis == SweepAxis::n_users && v != std::floor(v))
      throw ConfigError("n_users values must be integers");
    const GenConfig c = config_at(v);
    c.check();
    if (oracle && c.n_users > kMaxEnumerationUsers)
      throw ConfigError("oracle baselines need N <= 8, got N = " + std::to_string(c.n_users));
  }
}

SweepSpec sweep_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sweep spec must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "axis" && key != "values" && key != "trials" && key != "gen" &&
        key != "problems" && key != "oracle")
      throw ParseError("unknown field '" + key + "' in sweep spec");
  SweepSpec spec;
  if (!j.contains("axis") || !j.at("axis").is_string()) throw ParseError("sweep spec needs an 'axis'");
  spec.axis = axis_from_string(j.at("axis").get<std::string>());
  if (j.contains("values")) {
    if (!j.at("values").is_array()) throw ParseError("values must be an array");
    for (const auto& v : j.at("values")) {
      if (!v.is_number()) throw ParseError("values must be numbers");
      spec.values.push_back(v.get<double>());
    }
  } else {
    spec.values = default_axis_values(spec.axis);
  }
  if (j.contains("trials")) {
    if (!j.at("trials").is_number_unsigned()) throw ParseError("trials must be a positive integer");
    spec.trials = j.at("trials").get<std::size_t>();
  }
  if (j.contains("gen")) spec.gen = gen_config_from_json(j.at("gen"));
  if (j.contains("problems")) {
    spec.run_mls = spec.run_stm = false;
    for (const auto& p : j.at("problems")) {
      const auto name = p.is_string() ? p.get<std::string>() : std::string();
      if (name == "mls")
        spec.run_mls = true;
      else if (name == "stm")
        spec.run_stm = true;
      else
        throw ConfigError("unknown problem '" + name + "'");
    }
  }
  if (j.contains("oracle")) {
    if (!j.at("oracle").is_boolean()) throw ParseError("oracle must be a boolean");
    spec.oracle = j.at("oracle").get<bool>();
  }
  return spec;
}

Json to_json(const SweepSpec& spec) {
  Json problems = Json::array();
  if (spec.run_mls) problems.push_back("mls");
  if (spec.run_stm) problems.push_back("stm");
  return Json{{"axis", to_string(spec.axis)}, {"values", spec.values}, {"trials", spec.trials},
              {"gen", to_json(spec.gen)},     {"problems", problems},  {"oracle", spec.oracle}};
}

TrialResult::TrialResult()
    : mlsa_length(kNaN), pdo_length(kNaN), mls_opt_length(kNaN), mrsa_throughput(kNaN),
      opt_throughput(kNaN), ratio(kNaN) {}

TrialResult run_trial(const SweepSpec& spec, double axis_value, std::size_t trial) {
  TrialResult r;
  r.axis_value = axis_value;
  r.trial = trial;
  GenConfig config = spec.config_at(axis_value);
  r.seed = config.seed = trial_seed(spec.gen.seed, trial);
  const NetworkInstance instance = sample(config);

  if (spec.run_mls) {
    try {
      const auto best = mlsa(instance);
      const auto baseline = pdo(instance);
      require_valid(instance, best.schedule, true, "mlsa");
      require_valid(instance, baseline.schedule, true, "pdo");
      r.mlsa_length = best.length;
      r.pdo_length = baseline.length;
      if (spec.oracle) r.mls_opt_length = brute_force_mls(instance, Execution::serial).length;
    } catch (const InfeasibleError&) {
      r.mls_infeasible = true;
      r.mlsa_length = r.pdo_length = r.mls_opt_length = kNaN;
    }
  }
  if (spec.run_stm) {
    const auto heuristic = mrsa(instance);
    require_valid(instance, heuristic.schedule, false, "mrsa");
    r.mrsa_throughput = heuristic.throughput;
    if (spec.oracle) {
      const auto opt = brute_force_stm(instance, Execution::serial);
      require_valid(instance, opt.schedule, false, "brute_force_stm");
      r.opt_throughput = opt.throughput;
      r.ratio = opt.throughput > 0 ? heuristic.throughput / opt.throughput : 1.0;
    }
  }
  return r;
}

Summary summarize(const std::vector<double>& values) {
  Summary s;
  s.count = values.size();
  if (s.count == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(s.count - 1));
  }
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, Execution exec) {
  spec.check();
  SweepResult result;
  result.spec = spec;
  const std::size_t points = spec.values.size();
  const auto total = static_cast<std::int64_t>(points * spec.trials);
  result.trials.resize(points * spec.trials);

  if (exec == Execution::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < total; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      try {
        result.trials[idx] = run_trial(spec, spec.values[idx / spec.trials], idx % spec.trials);
      } catch (...) {
#pragma omp critical(fdwpcn_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t idx = 0; idx < result.trials.size(); ++idx)
      result.trials[idx] = run_trial(spec, spec.values[idx / spec.trials], idx % spec.trials);
  }

  for (std::size_t p = 0; p < points; ++p) {
    PointSummary s;
    s.axis_value = spec.values[p];
    s.trials = spec.trials;
    std::vector<double> mlsa_v, pdo_v, mrsa_v, opt_v, ratio_v;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const auto& r = result.trials[p * spec.trials + t];
      if (r.mls_infeasible) ++s.mls_infeasible;
      if (!std::isnan(r.mlsa_length)) mlsa_v.push_back(r.mlsa_length);
      if (!std::isnan(r.pdo_length)) pdo_v.push_back(r.pdo_length);
      if (!std::isnan(r.mrsa_throughput)) mrsa_v.push_back(r.mrsa_throughput);
      if (!std::isnan(r.opt_throughput)) opt_v.push_back(r.opt_throughput);
      if (!std::isnan(r.ratio)) {
        ratio_v.push_back(r.ratio);
        if (r.ratio >= 1.0 - kExactHitTolerance) ++s.opt_hits;
      }
    }
    s.mlsa_length = summarize(mlsa_v);
    s.pdo_length = summarize(pdo_v);
    s.mrsa_throughput = summarize(mrsa_v);
    s.opt_throughput = summarize(opt_v);
    s.ratio = summarize(ratio_v);
    result.points.push_back(s);
  }
  return result;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "axis",           "axis_value",      "trials",
      "mls_infeasible", "mlsa_length_mean", "mlsa_length_std",
      "pdo_length_mean", "pdo_length_std", "mrsa_throughput_mean",
      "mrsa_throughput_std", "opt_throughput_mean", "opt_throughput_std",
      "ratio_mean",     "ratio_std",       "opt_hits"};
  return columns;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  const bool with_mls = result.spec.run_mls;
  const bool with_opt = result.spec.run_stm && result.spec.oracle;
  for (const auto& p : result.points) {
    out << to_string(result.spec.axis) << ',' << cell(p.axis_value) << ',' << p.trials << ','
        << (with_mls ? std::to_string(p.mls_infeasible) : std::string()) << ','
        << cell(p.mlsa_length, &Summary::mean) << ',' << cell(p.mlsa_length, &Summary::stddev) << ','
        << cell(p.pdo_length, &Summary::mean) << ',' << cell(p.pdo_length, &Summary::stddev) << ','
        << cell(p.mrsa_throughput, &Summary::mean) << ','
        << cell(p.mrsa_throughput, &Summary::stddev) << ','
        << cell(p.opt_throughput, &Summary::mean) << ','
        << cell(p.opt_throughput, &Summary::stddev) << ',' << cell(p.ratio, &Summary::mean) << ','
        << cell(p.ratio, &Summary::stddev) << ','
        << (with_opt ? std::to_string(p.opt_hits) : std::string()) << '\n';
  }
}

void write_raw_jsonl(std::ostream& out, const SweepResult& result) {
  for (const auto& r : result.trials) {
    Json j{{"axis", to_string(result.spec.axis)},
           {"axis_value", r.axis_value},
           {"trial", r.trial},
           {"seed", r.seed},
           {"mls_infeasible", r.mls_infeasible},
           {"mlsa_length", number_or_null(r.mlsa_length)},
           {"pdo_length", number_or_null(r.pdo_length)},
           {"mls_opt_length", number_or_null(r.mls_opt_length)},
           {"mrsa_throughput", number_or_null(r.mrsa_throughput)},
           {"opt_throughput", number_or_null(r.opt_throughput)},
           {"ratio", number_or_null(r.ratio)}};
    out << j.dump() << '\n';
  }
}

}  // namespace fdwpcn
