#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mwsn/errors.hpp"
#include "mwsn/harness.hpp"

namespace mwsn {

/// Flat key = value scenario description. Field defaults are the documented
/// defaults a config file falls back to for missing keys.
struct ToolConfig {
  double arena_side = 4000.0;
  long n_nodes = 10;
  Model mobility_model = Model::CoverageBased;
  double node_speed = 5.0;
  double range = 500.0;
  double step_length = 50.0;
  TargetKind target_kind = TargetKind::Stationary;
  double target_duration = 500.0;
  double target_speed = 5.0;
  double dt = 1.0;
  long runs = 2000;
  std::uint64_t base_seed = 1;
  std::vector<long> n_values = {2, 10, 18, 26};
  std::vector<double> td_values = {100.0, 300.0, 500.0, 1000.0};
  std::vector<Model> models = {Model::Static, Model::RandomWalk,
                               Model::RandomDirection, Model::ParallelPath,
                               Model::CoverageBased};
};

/// Assigns one key from its textual value, validating the per-key invariant.
/// Throws ConfigError naming the key on unknown keys or bad values.
void set_config_key(ToolConfig& config, std::string_view key,
                    std::string_view value);

/// Parses a line-oriented `key = value` document ('#' starts a comment).
/// Errors name the offending line and key.
ToolConfig parse_config(std::string_view text);

ToolConfig load_config_file(const std::string& path);

/// Canonical text form listing every key; parse(normalize(parse(t))) equals
/// parse(t) for any accepted document t.
std::string normalize_config(const ToolConfig& config);

SimConfig to_sim_config(const ToolConfig& config);
Experiment to_experiment(const ToolConfig& config);
SweepGrid to_sweep_grid(const ToolConfig& config);

}  // namespace mwsn
