// Compares the OpenMP kernels against their serial references: Monte Carlo
// run batches and the swept-coverage grid. Also checks that both paths agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#else
static int omp_get_max_threads() { return 1; }
#endif

#include "mwsn/engine.hpp"
#include "mwsn/harness.hpp"

using namespace mwsn;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_results(const std::vector<RunResult>& a,
                  const std::vector<RunResult>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].detected != b[i].detected ||
        a[i].detection_time != b[i].detection_time ||
        a[i].tracked_ticks != b[i].tracked_ticks ||
        a[i].event_ticks != b[i].event_ticks) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  long runs = 400;
  if (argc > 1) runs = std::strtol(argv[1], nullptr, 10);

  SimConfig config;
  config.n_nodes = 18;
  config.mobility.model = Model::CoverageBased;
  config.target.kind = TargetKind::Stationary;
  config.target.duration = 500.0;

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial_ms", "openmp_ms",
              "speedup");

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = run_many_serial(config, 1, runs);
  const double serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto parallel = run_many(config, 1, runs);
  const double parallel_ms = ms_since(t0);
  std::printf("%-28s %12.1f %12.1f %8.2fx\n",
              ("monte_carlo(" + std::to_string(runs) + " runs)").c_str(),
              serial_ms, parallel_ms, serial_ms / parallel_ms);
  const bool runs_match = same_results(serial, parallel);

  const int seeds = 5;
  double frac_serial = 0.0;
  double frac_parallel = 0.0;
  t0 = std::chrono::steady_clock::now();
  for (int s = 1; s <= seeds; ++s) {
    frac_serial += estimate_area_coverage(config, 1000.0, 100.0, s, false);
  }
  const double grid_serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  for (int s = 1; s <= seeds; ++s) {
    frac_parallel += estimate_area_coverage(config, 1000.0, 100.0, s, true);
  }
  const double grid_parallel_ms = ms_since(t0);
  std::printf("%-28s %12.1f %12.1f %8.2fx\n", "coverage_grid(5 seeds)",
              grid_serial_ms, grid_parallel_ms,
              grid_serial_ms / grid_parallel_ms);

  const bool grid_match = frac_serial == frac_parallel;
  std::printf("results identical: %s\n",
              runs_match && grid_match ? "yes" : "NO");
  return runs_match && grid_match ? 0 : 1;
}
