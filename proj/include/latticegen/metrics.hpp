#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticegen/sampler.hpp"

namespace latticegen {

/// Entropy in bits of the sampler's output law at length n.
double output_entropy_bits(const SamplerSpec& spec, std::size_t n);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::size_t n = 0;
  std::size_t steps = 0;
  /// Step reads and writes over all attempts, divided by output steps.
  double time_factor = 0;
  double entropy_bits = 0;
  std::uint64_t physical_bits = 0;
  std::uint64_t restarts = 0;
  std::uint64_t failed_accesses = 0;
};

struct Summary {
  double mean = 0;
  double stddev = 0;
  double q05 = 0;
  double median = 0;
  double q95 = 0;
};

Summary summarize(std::span<const double> values);

struct FactorReport {
  SamplerSpec spec;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  double wall_seconds = 0;

  Summary time_factor() const;
  double mean_entropy_bits() const;
  double mean_physical_bits() const;
  double mean_failed_accesses() const;
  double first_try_rate() const;
  /// Mean model entropy over the entropy of the output law.
  double entropy_factor() const;

  /// `trial,n,time_factor,entropy_bits,physical_bits,restarts` rows.
  std::string csv() const;
  std::string json() const;
};

/// Runs `trials` independent samples; trial i draws from
/// BitSource(derive_seed(seed, i)). `threads` = 0 uses the hardware
/// concurrency. Results do not depend on the thread count.
FactorReport run_metered(const SamplerSpec& spec, std::size_t n, std::size_t trials,
                         std::uint64_t seed, unsigned threads = 0);

/// Draws of S: a Poisson process on (ε, 1] with intensity 1/(2x), each point
/// x contributing an independent U[0, x], plus ε/4 for the truncated part.
/// With `add_uniform`, an independent U[0, 1] is added to each draw.
std::vector<double> simulate_limit_law(std::size_t trials, double epsilon, std::uint64_t seed,
                                       bool add_uniform = false);

struct ChiSquare {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 0;
};

/// Pearson goodness of fit of observed counts against expected
/// probabilities.
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected);
/// Test of homogeneity of two count vectors over the same categories.
ChiSquare chi_square_two_sample(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
/// Two-sample Kolmogorov–Smirnov distance.
double ks_distance(std::vector<double> a, std::vector<double> b);

}  // namespace latticegen
