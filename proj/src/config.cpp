#include "mwsn/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mwsn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(std::string_view key, const std::string& what) {
  throw ConfigError("key '" + std::string(key) + "': " + what);
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string buf(value);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) {
    fail(key, "expected a number, got '" + buf + "'");
  }
  return v;
}

long parse_long(std::string_view key, std::string_view value) {
  const std::string buf(value);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE) {
    fail(key, "expected an integer, got '" + buf + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  const std::string buf(value);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(buf.c_str(), &end, 10);
  if (end != buf.c_str() + buf.size() || buf.empty() || errno == ERANGE ||
      (!buf.empty() && buf.front() == '-')) {
    fail(key, "expected an unsigned integer, got '" + buf + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string_view> split_list(std::string_view key,
                                         std::string_view value) {
  std::vector<std::string_view> items;
  while (true) {
    const std::size_t comma = value.find(',');
    const std::string_view item = trim(value.substr(0, comma));
    if (item.empty()) fail(key, "empty list item");
    items.push_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

// Shortest decimal form that parses back to the same double, so that
// normalize -> parse is lossless.
std::string format_roundtrip(double v) {
  char buf[40];
  for (int precision : {15, 16, 17}) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void require_positive(std::string_view key, double v) {
  if (!(v > 0.0)) fail(key, "must be positive");
}

}  // namespace

void set_config_key(ToolConfig& config, std::string_view key,
                    std::string_view value) {
  if (key == "arena_side") {
    config.arena_side = parse_double(key, value);
    require_positive(key, config.arena_side);
  } else if (key == "n_nodes") {
    config.n_nodes = parse_long(key, value);
    if (config.n_nodes < 0) fail(key, "must be non-negative");
  } else if (key == "mobility_model") {
    const auto model = model_from_name(value);
    if (!model) fail(key, "unknown model '" + std::string(value) + "'");
    config.mobility_model = *model;
  } else if (key == "node_speed") {
    config.node_speed = parse_double(key, value);
    if (config.node_speed < 0.0) fail(key, "must be non-negative");
  } else if (key == "range") {
    config.range = parse_double(key, value);
    require_positive(key, config.range);
  } else if (key == "step_length") {
    config.step_length = parse_double(key, value);
    require_positive(key, config.step_length);
  } else if (key == "target_kind") {
    const auto kind = target_kind_from_name(value);
    if (!kind) fail(key, "unknown target kind '" + std::string(value) + "'");
    config.target_kind = *kind;
  } else if (key == "target_duration") {
    config.target_duration = parse_double(key, value);
    require_positive(key, config.target_duration);
  } else if (key == "target_speed") {
    config.target_speed = parse_double(key, value);
    require_positive(key, config.target_speed);
  } else if (key == "dt") {
    config.dt = parse_double(key, value);
    require_positive(key, config.dt);
  } else if (key == "runs") {
    config.runs = parse_long(key, value);
    if (config.runs < 1) fail(key, "must be at least 1");
  } else if (key == "base_seed") {
    config.base_seed = parse_u64(key, value);
  } else if (key == "n_values") {
    config.n_values.clear();
    for (const auto item : split_list(key, value)) {
      const long n = parse_long(key, item);
      if (n < 0) fail(key, "must be non-negative");
      config.n_values.push_back(n);
    }
  } else if (key == "td_values") {
    config.td_values.clear();
    for (const auto item : split_list(key, value)) {
      const double td = parse_double(key, item);
      require_positive(key, td);
      config.td_values.push_back(td);
    }
  } else if (key == "models") {
    config.models.clear();
    for (const auto item : split_list(key, value)) {
      const auto model = model_from_name(item);
      if (!model) fail(key, "unknown model '" + std::string(item) + "'");
      config.models.push_back(*model);
    }
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

ToolConfig parse_config(std::string_view text) {
  ToolConfig config;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    try {
      set_config_key(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

ToolConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string normalize_config(const ToolConfig& c) {
  std::ostringstream out;
  out << "arena_side = " << format_roundtrip(c.arena_side) << '\n';
  out << "n_nodes = " << c.n_nodes << '\n';
  out << "mobility_model = " << model_name(c.mobility_model) << '\n';
  out << "node_speed = " << format_roundtrip(c.node_speed) << '\n';
  out << "range = " << format_roundtrip(c.range) << '\n';
  out << "step_length = " << format_roundtrip(c.step_length) << '\n';
  out << "target_kind = " << target_kind_name(c.target_kind) << '\n';
  out << "target_duration = " << format_roundtrip(c.target_duration) << '\n';
  out << "target_speed = " << format_roundtrip(c.target_speed) << '\n';
  out << "dt = " << format_roundtrip(c.dt) << '\n';
  out << "runs = " << c.runs << '\n';
  out << "base_seed = " << c.base_seed << '\n';
  out << "n_values = ";
  for (std::size_t i = 0; i < c.n_values.size(); ++i) {
    if (i) out << ',';
    out << c.n_values[i];
  }
  out << '\n';
  out << "td_values = ";
  for (std::size_t i = 0; i < c.td_values.size(); ++i) {
    if (i) out << ',';
    out << format_roundtrip(c.td_values[i]);
  }
  out << '\n';
  out << "models = ";
  for (std::size_t i = 0; i < c.models.size(); ++i) {
    if (i) out << ',';
    out << model_name(c.models[i]);
  }
  out << '\n';
  return out.str();
}

SimConfig to_sim_config(const ToolConfig& c) {
  SimConfig sim;
  sim.arena.side = c.arena_side;
  sim.n_nodes = c.n_nodes;
  sim.mobility.model = c.mobility_model;
  sim.mobility.speed = c.node_speed;
  sim.mobility.max_speed = c.node_speed;
  sim.mobility.range = c.range;
  sim.mobility.step_length = c.step_length;
  sim.target.kind = c.target_kind;
  sim.target.duration = c.target_duration;
  sim.target.speed = c.target_speed;
  sim.target.step_length = c.step_length;
  sim.dt = c.dt;
  return sim;
}

Experiment to_experiment(const ToolConfig& c) {
  Experiment exp;
  exp.base_config = to_sim_config(c);
  exp.runs = c.runs;
  exp.base_seed = c.base_seed;
  return exp;
}

SweepGrid to_sweep_grid(const ToolConfig& c) {
  SweepGrid grid;
  grid.n_values = c.n_values;
  grid.td_values = c.td_values;
  grid.models = c.models;
  return grid;
}

}  // namespace mwsn
