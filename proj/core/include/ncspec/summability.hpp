#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncspec/spectral_data.hpp"

namespace ncspec {

enum class SummabilityVerdict { Plateau, Growing, Inconclusive };
std::string to_string(SummabilityVerdict v);

struct SummabilityConfig {
  /// Max (max - min) / mean of r_k over k in [K/2, K] for a plateau.
  double tail_spread_threshold = 0.25;
  /// Log-log slope of r_k over the last quarter above which r_k is growing.
  double growth_slope = 0.05;
  /// Fewer eigenvalues than this gives an inconclusive verdict.
  std::size_t min_samples = 8;
};

/// Finite-scale surrogate for the L^{n+} norm of (1 + D^2)^{-1/2}: with
/// mu'_k = (1 + mu_k^2)^{-1/2} sorted descending, sigma_k = mu'_1 + ... + mu'_k
/// and r_k = sigma_k / k^{(n-1)/n}.
struct SummabilityReport {
  double exponent = 1.0;
  std::size_t K = 0;
  std::vector<double> mu_prime;
  std::vector<double> sigma;
  std::vector<double> ratios;
  double tail_spread = 0.0;
  double tail_slope = 0.0;
  SummabilityVerdict verdict = SummabilityVerdict::Inconclusive;
};

/// Throws std::invalid_argument on an empty spectrum or exponent < 1.
SummabilityReport sigma_sequence(const SpectralData& spec, double exponent,
                                 const SummabilityConfig& config = {});

/// sigma_k(sub) <= sigma_k(ref) for every common k. Throws on exponent mismatch.
bool monotone_comparison(const SummabilityReport& sub, const SummabilityReport& ref,
                         double tolerance = 1e-12);

/// Total multiplicity of eigenvalues with |value| <= lambda.
std::size_t counting_function(const SpectralData& spec, double lambda, double tolerance = 1e-9);

}  // namespace ncspec
