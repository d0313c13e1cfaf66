#include "mwsn/analysis.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace mwsn {
namespace {

constexpr double kPi = std::numbers::pi;

void require_probability(double pd) {
  if (!(pd > 0.0 && pd < 1.0)) {
    throw std::invalid_argument("target probability must lie in (0, 1)");
  }
}

void require_params(const CoverageParams& p) {
  if (!(p.area > 0.0) || !(p.range > 0.0) || p.mean_speed < 0.0 ||
      p.horizon < 0.0) {
    throw std::invalid_argument("coverage parameters out of range");
  }
}

double swept_area_per_node(const CoverageParams& p, double t) {
  return kPi * p.range * p.range + 2.0 * p.range * p.mean_speed * t;
}

// Smallest n with prob(n) >= pd. ceil of the closed-form bound, then pinned
// against the probability itself so the round-trip is exact in doubles.
long smallest_sufficient_n(double pd, double per_node_area, double area,
                           const std::function<double(long)>& prob) {
  const double raw = -area * std::log1p(-pd) / per_node_area;
  long n = raw <= 1.0 ? 1 : static_cast<long>(std::ceil(raw));
  while (n > 1 && prob(n - 1) >= pd) --n;
  while (prob(n) < pd) ++n;
  return n;
}

}  // namespace

double prob_k_coverage(long n, const CoverageParams& params, long k) {
  require_params(params);
  if (n < 0 || k < 0) {
    throw std::invalid_argument("counts must be non-negative");
  }
  const double lambda =
      static_cast<double>(n) * swept_area_per_node(params, 0.0) / params.area;
  if (k == 0) return std::exp(-lambda);
  if (lambda == 0.0) return 0.0;
  return std::exp(-lambda + static_cast<double>(k) * std::log(lambda) -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

double detect_prob_static(long n, const CoverageParams& params) {
  require_params(params);
  const double lambda =
      static_cast<double>(n) * swept_area_per_node(params, 0.0) / params.area;
  return 1.0 - std::exp(-lambda);
}

double detect_prob_mobile(long n, const CoverageParams& params) {
  require_params(params);
  const double lambda = static_cast<double>(n) *
                        swept_area_per_node(params, params.horizon) /
                        params.area;
  return 1.0 - std::exp(-lambda);
}

long min_nodes_static(double pd, const CoverageParams& params) {
  require_probability(pd);
  require_params(params);
  return smallest_sufficient_n(
      pd, swept_area_per_node(params, 0.0), params.area,
      [&](long n) { return detect_prob_static(n, params); });
}

long min_nodes_mobile(double pd, const CoverageParams& params) {
  require_probability(pd);
  require_params(params);
  return smallest_sufficient_n(
      pd, swept_area_per_node(params, params.horizon), params.area,
      [&](long n) { return detect_prob_mobile(n, params); });
}

long nodes_no_overlap(const CoverageParams& params, double event_duration) {
  require_params(params);
  if (event_duration < 0.0) {
    throw std::invalid_argument("event duration must be non-negative");
  }
  return static_cast<long>(
      std::ceil(params.area / swept_area_per_node(params, event_duration)));
}

}  // namespace mwsn
