#include "mwsn/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mwsn {

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "model,n_nodes,target_duration_s,detection_mean,detection_stderr,"
         "tracking_mean,tracking_stderr,runs\n";
  for (const SweepRow& row : rows) {
    out << model_name(row.model) << ',' << row.n_nodes << ','
        << format_sig6(row.target_duration) << ','
        << format_sig6(row.detection.mean) << ','
        << format_sig6(row.detection.std_error) << ','
        << format_sig6(row.tracking.mean) << ','
        << format_sig6(row.tracking.std_error) << ',' << row.detection.runs
        << '\n';
  }
  return out.str();
}

std::string snapshot_positions_csv(std::span<const Snapshot> snapshots) {
  std::ostringstream out;
  out << "time_s,node_index,x_m,y_m\n";
  for (const Snapshot& snap : snapshots) {
    for (std::size_t i = 0; i < snap.positions.size(); ++i) {
      out << format_sig6(snap.time) << ',' << i << ','
          << format_sig6(snap.positions[i].x) << ','
          << format_sig6(snap.positions[i].y) << '\n';
    }
  }
  return out.str();
}

std::string histogram_csv(const Histogram& histogram) {
  std::ostringstream out;
  out << "bin_left_m,bin_right_m,count\n";
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    out << format_sig6(static_cast<double>(i) * histogram.bin_width) << ','
        << format_sig6(static_cast<double>(i + 1) * histogram.bin_width) << ','
        << histogram.counts[i] << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace mwsn
