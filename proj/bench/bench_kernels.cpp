// Serial reference vs OpenMP kernels for the exhaustive order searches and
// the sweep driver. Also checks that both kernels agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "fdwpcn/mls.hpp"
#include "fdwpcn/netgen.hpp"
#include "fdwpcn/stm.hpp"
#include "fdwpcn/sweep.hpp"

namespace {

double time_ms(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  using fdwpcn::Execution;
  std::printf("threads: %d\n", omp_get_max_threads());
  bool all_same = true;

  for (std::size_t n : {6, 7, 8}) {
    fdwpcn::GenConfig config;
    config.n_users = n;
    config.seed = 42 + n;
    config.initial_energy_max = 1e-5;
    const auto instance = fdwpcn::sample(config);

    fdwpcn::MlsSolution ms, mp;
    const double mls_serial = time_ms([&] { ms = fdwpcn::brute_force_mls(instance, Execution::serial); });
    const double mls_parallel = time_ms([&] { mp = fdwpcn::brute_force_mls(instance, Execution::parallel); });
    bool same = ms.length == mp.length && ms.schedule.slots.size() == mp.schedule.slots.size();
    for (std::size_t k = 0; same && k < ms.schedule.slots.size(); ++k)
      same = ms.schedule.slots[k].user == mp.schedule.slots[k].user;
    char name[64];
    std::snprintf(name, sizeof name, "brute_force_mls N=%zu", n);
    report(name, mls_serial, mls_parallel, same);
    all_same = all_same && same;

    fdwpcn::StmSolution ss, sp;
    const double stm_serial = time_ms([&] { ss = fdwpcn::brute_force_stm(instance, Execution::serial); });
    const double stm_parallel = time_ms([&] { sp = fdwpcn::brute_force_stm(instance, Execution::parallel); });
    same = ss.throughput == sp.throughput && ss.airtime == sp.airtime;
    std::snprintf(name, sizeof name, "brute_force_stm N=%zu", n);
    report(name, stm_serial, stm_parallel, same);
    all_same = all_same && same;
  }

  fdwpcn::SweepSpec spec;
  spec.axis = fdwpcn::SweepAxis::hap_power;
  spec.values = fdwpcn::default_axis_values(spec.axis);
  spec.trials = 100;
  spec.gen.n_users = 5;
  spec.oracle = true;
  fdwpcn::SweepResult rs, rp;
  const double sweep_serial = time_ms([&] { rs = fdwpcn::run_sweep(spec, Execution::serial); });
  const double sweep_parallel = time_ms([&] { rp = fdwpcn::run_sweep(spec, Execution::parallel); });
  bool same = rs.points.size() == rp.points.size();
  for (std::size_t k = 0; same && k < rs.points.size(); ++k)
    same = rs.points[k].mlsa_length.mean == rp.points[k].mlsa_length.mean &&
           rs.points[k].opt_throughput.mean == rp.points[k].opt_throughput.mean;
  report("run_sweep 5x100 N=5 oracle", sweep_serial, sweep_parallel, same);
  all_same = all_same && same;

  return all_same ? EXIT_SUCCESS : EXIT_FAILURE;
}
