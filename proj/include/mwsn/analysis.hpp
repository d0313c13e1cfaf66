#pragma once

namespace mwsn {

/// Inputs of the closed-form coverage results. Node density is n/area and is
/// derived inside each operation.
struct CoverageParams {
  double area = 16.0e6;      // m^2
  double range = 500.0;      // m
  double mean_speed = 5.0;   // m/s
  double horizon = 0.0;      // s observation window for mobile coverage
};

/// Probability that a point is covered by exactly k of n uniformly placed
/// nodes (Poisson with parameter n*pi*range^2/area).
double prob_k_coverage(long n, const CoverageParams& params, long k);

/// Fraction of the area covered by at least one of n static nodes; equals
/// the detection probability for an event at a uniform location.
double detect_prob_static(long n, const CoverageParams& params);

/// Fraction covered by at least one of n mobile nodes within the horizon;
/// each node sweeps pi*range^2 + 2*range*mean_speed*horizon. Reduces to the
/// static result at horizon 0 or mean_speed 0.
double detect_prob_mobile(long n, const CoverageParams& params);

/// Smallest node count whose static detection probability reaches pd.
/// Requires 0 < pd < 1.
long min_nodes_static(double pd, const CoverageParams& params);

/// Smallest node count whose mobile detection probability reaches pd within
/// params.horizon. Requires 0 < pd < 1.
long min_nodes_mobile(double pd, const CoverageParams& params);

/// Node count needed if swept regions never overlapped during an event of
/// the given duration: ceil(area / (pi*range^2 + 2*range*mean_speed*t)).
long nodes_no_overlap(const CoverageParams& params, double event_duration);

}  // namespace mwsn
