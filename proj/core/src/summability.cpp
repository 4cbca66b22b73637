#include "ncspec/summability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncspec {

std::string to_string(SummabilityVerdict v) {
  switch (v) {
    case SummabilityVerdict::Plateau: return "plateau";
    case SummabilityVerdict::Growing: return "growing";
    case SummabilityVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Least-squares slope of log r_k against log k over 1-based k in [first, last].
double log_log_slope(const std::vector<double>& ratios, std::size_t first, std::size_t last) {
  if (last <= first) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const auto count = static_cast<double>(last - first + 1);
  for (std::size_t k = first; k <= last; ++k) {
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(ratios[k - 1]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = count * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (count * sxy - sx * sy) / denom;
}

}  // namespace

SummabilityReport sigma_sequence(const SpectralData& spec, double exponent,
                                 const SummabilityConfig& config) {
  if (spec.empty()) throw std::invalid_argument("sigma_sequence: empty spectrum");
  if (!(exponent >= 1.0)) throw std::invalid_argument("sigma_sequence: exponent must be >= 1");

  SummabilityReport r;
  r.exponent = exponent;
  r.mu_prime = spec.expanded();
  for (double& v : r.mu_prime) v = 1.0 / std::sqrt(1.0 + v * v);
  std::stable_sort(r.mu_prime.begin(), r.mu_prime.end(), std::greater<>());
  r.K = r.mu_prime.size();

  const double power = (exponent - 1.0) / exponent;
  r.sigma.resize(r.K);
  r.ratios.resize(r.K);
  double acc = 0.0;
  for (std::size_t k = 1; k <= r.K; ++k) {
    acc += r.mu_prime[k - 1];
    r.sigma[k - 1] = acc;
    r.ratios[k - 1] = acc / std::pow(static_cast<double>(k), power);
  }

  const std::size_t tail_first = std::max<std::size_t>(1, (r.K + 1) / 2);
  const auto tail_begin = r.ratios.begin() + static_cast<std::ptrdiff_t>(tail_first - 1);
  const auto [lo, hi] = std::minmax_element(tail_begin, r.ratios.end());
  double mean = 0.0;
  for (auto it = tail_begin; it != r.ratios.end(); ++it) mean += *it;
  mean /= static_cast<double>(std::distance(tail_begin, r.ratios.end()));
  r.tail_spread = (*hi - *lo) / mean;

  const std::size_t quarter_first = std::max<std::size_t>(1, (3 * r.K + 3) / 4);
  r.tail_slope = log_log_slope(r.ratios, quarter_first, r.K);

  if (r.K < config.min_samples) {
    r.verdict = SummabilityVerdict::Inconclusive;
  } else if (r.tail_slope > config.growth_slope) {
    r.verdict = SummabilityVerdict::Growing;
  } else if (r.tail_spread < config.tail_spread_threshold) {
    r.verdict = SummabilityVerdict::Plateau;
  } else {
    r.verdict = SummabilityVerdict::Inconclusive;
  }
  return r;
}

bool monotone_comparison(const SummabilityReport& sub, const SummabilityReport& ref,
                         double tolerance) {
  if (sub.exponent != ref.exponent) {
    throw std::invalid_argument("monotone_comparison: exponent mismatch");
  }
  const std::size_t common = std::min(sub.sigma.size(), ref.sigma.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (sub.sigma[k] > ref.sigma[k] + tolerance * std::max(1.0, ref.sigma[k])) return false;
  }
  return true;
}

std::size_t counting_function(const SpectralData& spec, double lambda, double tolerance) {
  if (lambda < 0.0) throw std::invalid_argument("counting_function: negative threshold");
  std::size_t count = 0;
  for (const auto& e : spec.entries()) {
    if (std::abs(e.value) <= lambda + tolerance) count += e.multiplicity;
  }
  return count;
}

}  // namespace ncspec
