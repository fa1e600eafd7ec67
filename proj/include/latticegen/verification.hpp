#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latticegen/exact_number.hpp"
#include "latticegen/sampler.hpp"

namespace latticegen {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string text() const;
  std::string json() const;
};

struct SuiteOptions {
  /// Overrides the suite's default size bound.
  std::optional<std::size_t> max_length;
  std::uint64_t seed = 1;
};

/// Names accepted by `run_suite`.
std::vector<std::string_view> suite_names();
/// Throws ContractViolation on an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

// Individual checks, also used directly by the acceptance tests.

/// Aggregated over all Łukasiewicz inputs of length n, recover yields every
/// positive path with probability exactly q_n.
CheckResult check_motzkin_recover_lemma(std::size_t n);
/// Colored variant: inputs weighted by c^{#C}, outputs get q_n·c^{#C}.
CheckResult check_colored_recover_lemma(std::size_t n, const Rational& c);
/// Aggregated over positive inputs of length m, extend yields every positive
/// path of length m+1 and height > 0 with probability exactly r.
CheckResult check_extend_lemma(std::size_t m);
/// Odd m: q_m per positive path of length m, q_m·r per positive path of
/// length m+1 ending with F.
CheckResult check_schroeder_recover_lemma(std::size_t m);
/// Little inputs: r per little positive output of length m+1, except
/// those of height 1 ending with F.
CheckResult check_little_extend_lemma(std::size_t m);

/// Output law given success equals the uniform (or weight-proportional)
/// law on the target class.
CheckResult check_exact_uniformity(const SamplerSpec& spec, std::size_t n);
/// One attempt of the approximate Schröder (or Motzkin positive) sampler
/// outputs each target path with the closed-form probability p_n.
CheckResult check_attempt_probability(Model model, std::size_t n);

/// unfold/fold round trip and uniqueness of the mid-height factorization.
CheckResult check_unfold_bijection(Model model, std::size_t n);
/// Marked-flat unfold against the plain unfold of σ·τ, and its inverse.
CheckResult check_flat_unfold(std::size_t n);
/// lift is a bijection from non-little positive paths of length n onto
/// little positive paths of length n−1 with height ≥ 1, and ω ↦ lift(ω)·D
/// maps non-little onto little excursions.
CheckResult check_lift_bijection(std::size_t n);
/// count(n) = 2·little(n) by enumeration.
CheckResult check_twice_little(std::size_t n);
/// DP count equals enumeration size for every class of the model.
CheckResult check_counts_against_enumeration(Model model, std::size_t n);

/// Chi-square fit of `samples` draws against the exact target law.
CheckResult check_empirical_uniformity(const SamplerSpec& spec, std::size_t n, std::size_t samples,
                                       std::uint64_t seed);
/// Two-sample homogeneity of the baseline against the recovery sampler.
CheckResult check_baseline_agreement(Family family, std::size_t n, std::size_t samples, std::uint64_t seed);

}  // namespace latticegen
