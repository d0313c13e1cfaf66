#include "mwsn/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <optional>
#include <span>
#include <utility>

#include <CLI11.hpp>

#include "mwsn/analysis.hpp"
#include "mwsn/config.hpp"
#include "mwsn/csv.hpp"
#include "mwsn/errors.hpp"

namespace mwsn::cli {
namespace {

struct CommonOpts {
  std::string config_path;
  bool has_config = false;
  std::vector<std::pair<std::string, std::string>> overrides;
};

void add_config_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option_function<std::string>(
      "--config",
      [&opts](const std::string& v) {
        opts.config_path = v;
        opts.has_config = true;
      },
      "Config file with key = value lines");
  const auto bind = [cmd, &opts](const std::string& names,
                                 const std::string& key,
                                 const std::string& help) {
    cmd->add_option_function<std::string>(
        names,
        [&opts, key](const std::string& v) { opts.overrides.emplace_back(key, v); },
        help);
  };
  bind("--arena_side", "arena_side", "Square arena side (m)");
  bind("--n,--n_nodes", "n_nodes", "Number of nodes");
  bind("--model,--mobility_model", "mobility_model",
       "static|random_walk|random_direction|parallel_path|coverage_based");
  bind("--node_speed", "node_speed", "Node speed (m/s)");
  bind("--range", "range", "Sensing/transmission radius (m)");
  bind("--step_length", "step_length",
       "Distance between direction decisions (m)");
  bind("--target,--target_kind", "target_kind",
       "stationary|linear|random_walk");
  bind("--td,--target_duration", "target_duration", "Event duration (s)");
  bind("--target_speed", "target_speed", "Target speed (m/s)");
  bind("--dt", "dt", "Simulation tick (s)");
  bind("--runs", "runs", "Monte Carlo runs per data point");
  bind("--base_seed", "base_seed", "Base seed; run i uses base_seed + i");
  bind("--n_values", "n_values", "Sweep node counts, comma separated");
  bind("--td_values", "td_values", "Sweep target durations, comma separated");
  bind("--models", "models", "Sweep models, comma separated");
}

ToolConfig build_config(const CommonOpts& opts) {
  ToolConfig cfg =
      opts.has_config ? load_config_file(opts.config_path) : ToolConfig{};
  for (const auto& [key, value] : opts.overrides) {
    set_config_key(cfg, key, value);
  }
  return cfg;
}

CoverageParams coverage_params(const ToolConfig& cfg) {
  CoverageParams params;
  params.area = cfg.arena_side * cfg.arena_side;
  params.range = cfg.range;
  params.mean_speed = cfg.node_speed;
  params.horizon = cfg.target_duration;
  return params;
}

std::vector<double> parse_times(const std::string& list) {
  std::vector<double> times;
  std::string_view rest = list;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    char* end = nullptr;
    errno = 0;
    const double t = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || errno == ERANGE ||
        t < 0.0) {
      throw ConfigError("flag --times: expected non-negative numbers, got '" +
                        item + "'");
    }
    times.push_back(t);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (times.empty()) throw ConfigError("flag --times: empty list");
  return times;
}

void run_analyze(const ToolConfig& cfg, std::optional<double> pd,
                 std::ostream& out) {
  const CoverageParams params = coverage_params(cfg);
  const std::string t = format_sig6(cfg.target_duration);
  out << "area_m2 = " << format_sig6(params.area) << '\n';
  out << "range_m = " << format_sig6(params.range) << '\n';
  out << "mean_speed_mps = " << format_sig6(params.mean_speed) << '\n';
  out << "detect_prob_static(n=" << cfg.n_nodes
      << ") = " << format_sig6(detect_prob_static(cfg.n_nodes, params))
      << '\n';
  out << "detect_prob_mobile(n=" << cfg.n_nodes << ", t=" << t
      << ") = " << format_sig6(detect_prob_mobile(cfg.n_nodes, params))
      << '\n';
  if (pd) {
    const std::string p = format_sig6(*pd);
    out << "min_nodes_static(pd=" << p
        << ") = " << min_nodes_static(*pd, params) << '\n';
    out << "min_nodes_mobile(pd=" << p << ", t=" << t
        << ") = " << min_nodes_mobile(*pd, params) << '\n';
  }
  out << "nodes_no_overlap(td=" << t
      << ") = " << nodes_no_overlap(params, cfg.target_duration) << '\n';
}

void run_simulate(const ToolConfig& cfg,
                  const std::optional<std::string>& out_path,
                  std::ostream& out) {
  const Experiment exp = to_experiment(cfg);
  const MonteCarloResult mc = monte_carlo(exp);
  out << "model = " << model_name(cfg.mobility_model) << '\n';
  out << "n_nodes = " << cfg.n_nodes << '\n';
  out << "target_kind = " << target_kind_name(cfg.target_kind) << '\n';
  out << "target_duration_s = " << format_sig6(cfg.target_duration) << '\n';
  out << "runs = " << exp.runs << '\n';
  out << "base_seed = " << exp.base_seed << '\n';
  out << "detection_mean = " << format_sig6(mc.detection.mean) << '\n';
  out << "detection_stderr = " << format_sig6(mc.detection.std_error) << '\n';
  out << "tracking_mean = " << format_sig6(mc.tracking.mean) << '\n';
  out << "tracking_stderr = " << format_sig6(mc.tracking.std_error) << '\n';
  if (out_path) {
    const SweepRow row{cfg.mobility_model, cfg.n_nodes, cfg.target_duration,
                       mc.detection, mc.tracking};
    write_file(*out_path, sweep_csv({&row, 1}));
  }
}

void run_sweep(const ToolConfig& cfg, const std::string& out_path,
               std::ostream& out) {
  const std::vector<SweepRow> rows =
      sweep(to_sweep_grid(cfg), to_experiment(cfg));
  write_file(out_path, sweep_csv(rows));
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
}

void run_minnodes(const ToolConfig& cfg, double pd, bool empirical,
                  long n_max, std::ostream& out) {
  const CoverageParams params = coverage_params(cfg);
  const std::string p = format_sig6(pd);
  const std::string t = format_sig6(cfg.target_duration);
  const long analytic_static = min_nodes_static(pd, params);
  const long analytic_mobile = min_nodes_mobile(pd, params);
  out << "min_nodes_static(pd=" << p << ") = " << analytic_static << '\n';
  out << "min_nodes_mobile(pd=" << p << ", t=" << t
      << ") = " << analytic_mobile << '\n';
  if (empirical) {
    const auto n = find_min_nodes_empirical(pd, to_experiment(cfg), n_max);
    out << "min_nodes_empirical(pd=" << p
        << ", model=" << model_name(cfg.mobility_model) << ", td=" << t
        << ") = ";
    if (n) {
      out << *n << '\n';
    } else {
      out << "not_achievable(n_max=" << n_max << ")\n";
    }
  }
}

void run_snapshot(const ToolConfig& cfg, const std::string& times_list,
                  const std::string& out_path,
                  const std::optional<std::string>& hist_path,
                  std::ostream& out) {
  const std::vector<double> times = parse_times(times_list);
  const SnapshotExport exp = export_snapshots(to_experiment(cfg), times);
  write_file(out_path, snapshot_positions_csv(exp.run0));
  out << "wrote " << exp.run0.size() << " snapshots to " << out_path << '\n';
  if (hist_path) {
    write_file(*hist_path, histogram_csv(exp.nn_histogram));
    out << "wrote nearest-neighbor histogram to " << *hist_path << '\n';
  }
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Mobile wireless sensor network coverage simulator", "mwsn"};
  app.require_subcommand(1);

  CommonOpts analyze_opts;
  std::optional<double> analyze_pd;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Closed-form coverage results");
  add_config_flags(analyze, analyze_opts);
  analyze->add_option_function<double>(
      "--pd", [&analyze_pd](double v) { analyze_pd = v; },
      "Desired detection probability for minimum-node results");

  CommonOpts simulate_opts;
  std::optional<std::string> simulate_out;
  CLI::App* simulate =
      app.add_subcommand("simulate", "One Monte Carlo experiment");
  add_config_flags(simulate, simulate_opts);
  simulate->add_option_function<std::string>(
      "--out", [&simulate_out](const std::string& v) { simulate_out = v; },
      "Also write the aggregates as a one-row CSV");

  CommonOpts sweep_opts;
  std::string sweep_out;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Monte Carlo grid over models, n, and td");
  add_config_flags(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

  CommonOpts minnodes_opts;
  double minnodes_pd = 0.0;
  bool minnodes_empirical = false;
  long minnodes_nmax = 200;
  CLI::App* minnodes =
      app.add_subcommand("minnodes", "Minimum node counts for a target pd");
  add_config_flags(minnodes, minnodes_opts);
  minnodes->add_option("--pd", minnodes_pd, "Desired detection probability")
      ->required();
  minnodes->add_flag("--empirical", minnodes_empirical,
                     "Also search the Monte Carlo minimum");
  minnodes->add_option("--n_max", minnodes_nmax,
                       "Upper bound of the empirical search");

  CommonOpts snapshot_opts;
  std::string snapshot_times;
  std::string snapshot_out;
  std::optional<std::string> snapshot_hist;
  CLI::App* snapshot = app.add_subcommand(
      "snapshot", "Node position exports and nearest-neighbor histogram");
  add_config_flags(snapshot, snapshot_opts);
  snapshot->add_option("--times", snapshot_times,
                       "Snapshot times in seconds, comma separated")
      ->required();
  snapshot->add_option("--out", snapshot_out, "Positions CSV path")
      ->required();
  snapshot->add_option_function<std::string>(
      "--hist", [&snapshot_hist](const std::string& v) { snapshot_hist = v; },
      "Nearest-neighbor histogram CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      run_analyze(build_config(analyze_opts), analyze_pd, out);
    } else if (simulate->parsed()) {
      run_simulate(build_config(simulate_opts), simulate_out, out);
    } else if (sweep_cmd->parsed()) {
      run_sweep(build_config(sweep_opts), sweep_out, out);
    } else if (minnodes->parsed()) {
      run_minnodes(build_config(minnodes_opts), minnodes_pd,
                   minnodes_empirical, minnodes_nmax, out);
    } else if (snapshot->parsed()) {
      run_snapshot(build_config(snapshot_opts), snapshot_times, snapshot_out,
                   snapshot_hist, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mwsn");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mwsn::cli
