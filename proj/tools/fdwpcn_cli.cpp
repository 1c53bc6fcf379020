// Command-line front end: instance generation, single solves and
// Monte Carlo sweeps.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fdwpcn/io.hpp"
#include "fdwpcn/mls.hpp"
#include "fdwpcn/stm.hpp"
#include "fdwpcn/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

using fdwpcn::Json;

Json solve_document(const fdwpcn::NetworkInstance& instance, const std::string& problem,
                    const std::string& alg, bool oracle) {
  Json out{{"problem", problem}, {"algorithm", alg}};
  if (problem == "mls") {
    fdwpcn::MlsSolution s;
    if (alg == "mlsa")
      s = fdwpcn::mlsa(instance);
    else if (alg == "pdo")
      s = fdwpcn::pdo(instance);
    else if (alg == "opt")
      s = fdwpcn::brute_force_mls(instance);
    else
      throw fdwpcn::ConfigError("algorithm '" + alg + "' does not solve mls (use mlsa, pdo or opt)");
    const auto report = fdwpcn::validate(instance, s.schedule, true);
    if (!report.all_ok()) throw std::logic_error(alg + " produced an infeasible schedule");
    out["schedule"] = fdwpcn::to_json(s.schedule);
    out["length"] = s.length;
    if (oracle) {
      const double best = fdwpcn::brute_force_mls(instance).length;
      out["oracle_length"] = best;
      out["ratio"] = s.length / best;
    }
    out["feasibility"] = fdwpcn::to_json(report);
  } else if (problem == "stm") {
    fdwpcn::StmSolution s;
    if (alg == "mrsa")
      s = fdwpcn::mrsa(instance);
    else if (alg == "opt")
      s = fdwpcn::brute_force_stm(instance);
    else
      throw fdwpcn::ConfigError("algorithm '" + alg + "' does not solve stm (use mrsa or opt)");
    const auto report = fdwpcn::validate(instance, s.schedule, false);
    if (!report.all_ok()) throw std::logic_error(alg + " produced an infeasible schedule");
    out["schedule"] = fdwpcn::to_json(s.schedule);
    out["throughput"] = s.throughput;
    if (oracle) {
      const double best = fdwpcn::brute_force_stm(instance).throughput;
      out["oracle_throughput"] = best;
      out["ratio"] = best > 0 ? s.throughput / best : 1.0;
    }
    out["feasibility"] = fdwpcn::to_json(report);
  } else {
    throw fdwpcn::ConfigError("unknown problem '" + problem + "'");
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    fdwpcn::write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scheduling for full-duplex wireless powered networks"};
  app.require_subcommand(1);

  std::string spec_path, csv_path, raw_path;
  std::size_t trials_override = 0;
  bool paper_trials = false, serial = false;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over one axis, written as CSV");
  sweep->add_option("--spec", spec_path, "Sweep spec JSON")->required();
  sweep->add_option("--out", csv_path, "CSV output path ('-' for stdout)")->required();
  sweep->add_option("--raw", raw_path, "Per-trial JSON lines output");
  sweep->add_option("--trials", trials_override, "Override the spec's trial count");
  sweep->add_flag("--paper-trials", paper_trials, "Use 1000 trials per point");
  sweep->add_flag("--serial", serial, "Run trials on one thread");

  std::string instance_path, problem, alg, solve_out;
  bool oracle = false;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print the schedule as JSON");
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--problem", problem, "mls or stm")->required()->check(CLI::IsMember({"mls", "stm"}));
  solve->add_option("--alg", alg, "mlsa, pdo, mrsa or opt")
      ->required()
      ->check(CLI::IsMember({"mlsa", "pdo", "mrsa", "opt"}));
  solve->add_flag("--oracle", oracle, "Also report the exhaustive optimum and the ratio");
  solve->add_option("--out", solve_out, "Output path (default stdout)");

  std::string config_path, gen_out;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Sample a random network instance");
  gen->add_option("--config", config_path, "Generator config JSON")->required();
  gen->add_option("--seed", seed, "Seed (overrides the config)")->required();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep) {
      auto spec = fdwpcn::sweep_spec_from_json(fdwpcn::read_json_file(spec_path));
      if (paper_trials) spec.trials = 1000;
      if (trials_override > 0) spec.trials = trials_override;
      const auto result = fdwpcn::run_sweep(
          spec, serial ? fdwpcn::Execution::serial : fdwpcn::Execution::parallel);
      std::ostringstream csv;
      fdwpcn::write_csv(csv, result);
      emit(csv_path, csv.str());
      if (!raw_path.empty()) {
        std::ostringstream raw;
        fdwpcn::write_raw_jsonl(raw, result);
        emit(raw_path, raw.str());
      }
    } else if (*solve) {
      const auto instance = fdwpcn::instance_from_json(fdwpcn::read_json_file(instance_path));
      emit(solve_out, solve_document(instance, problem, alg, oracle).dump(2) + "\n");
    } else if (*gen) {
      auto config = fdwpcn::gen_config_from_json(fdwpcn::read_json_file(config_path));
      config.seed = seed;
      const auto instance = fdwpcn::sample(config);
      emit(gen_out, fdwpcn::instance_document(instance, config).dump(2) + "\n");
    }
  } catch (const fdwpcn::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const fdwpcn::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    // ConfigError, TooLargeError and InvalidParamsError
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
