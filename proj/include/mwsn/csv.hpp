#pragma once

#include <span>
#include <string>

#include "mwsn/harness.hpp"

namespace mwsn {

/// Number rendered with 6 significant digits, the fixed CSV format.
std::string format_sig6(double v);

/// CSV with the fixed header
/// model,n_nodes,target_duration_s,detection_mean,detection_stderr,
/// tracking_mean,tracking_stderr,runs
/// and one row per sweep cell, LF line endings.
std::string sweep_csv(std::span<const SweepRow> rows);

/// CSV `time_s,node_index,x_m,y_m`, one row per node per snapshot time.
std::string snapshot_positions_csv(std::span<const Snapshot> snapshots);

/// CSV `bin_left_m,bin_right_m,count` over the histogram's bins.
std::string histogram_csv(const Histogram& histogram);

/// Writes text to path, throwing std::runtime_error naming the path on
/// failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace mwsn
