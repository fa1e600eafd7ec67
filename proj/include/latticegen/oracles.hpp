#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latticegen/exact_number.hpp"
#include "latticegen/path.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/sampler.hpp"

namespace latticegen {

/// Path classes the oracles can enumerate and count. Little classes are
/// Schröder-only: no F step at height 0.
enum class PathKind { Positive, Excursion, Lukasiewicz, LittlePositive, LittleExcursion };

std::string_view to_string(PathKind k) noexcept;

/// Largest length `enumerate` accepts.
inline constexpr std::size_t enumeration_bound = 14;

/// Every path of the class with (geometric) length n, sorted by step text.
/// The colored model lists C as a separate step.
std::vector<Path> enumerate(Model model, PathKind kind, std::size_t n);

/// Weight c^{#C} of a colored path; 1 for other models.
Rational weight(const Path& p, const Rational& c);

/// Dynamic programming over (length, height). Colored paths count each C
/// step with weight `c` (default 1, i.e. plain cardinality).
Integer count_dp(Model model, PathKind kind, std::size_t n);
Rational weighted_count_dp(PathKind kind, std::size_t n, const Rational& c);

/// Same numbers through binomial sums where one exists (positive paths and
/// excursions, little excursions); falls back to the DP otherwise.
Integer count(Model model, PathKind kind, std::size_t n);
Rational weighted_count(PathKind kind, std::size_t n, const Rational& c);

/// log₂ of the count (or total weight), accurate for very large n.
/// Binomial sums go through lgamma; little positive paths use a scaled
/// floating-point DP with a height cap far beyond the typical √n range.
double log2_count(Model model, PathKind kind, std::size_t n,
                  const std::optional<Rational>& c = std::nullopt);
/// Mean number of C steps of a weight-proportional colored path.
double expected_colored_steps(PathKind kind, std::size_t n, const Rational& c);

struct CountTable {
  Model model;
  PathKind kind;
  std::vector<Integer> values;  // values[n] for n = 0..max

  std::string json() const;
};

CountTable count_table(Model model, PathKind kind, std::size_t max_n);

/// Exact finite distribution of a randomized procedure: path text ↦
/// probability, plus the probability of rejecting.
struct DistTable {
  std::map<std::string, ExactNumber> entries;
  ExactNumber reject_mass;

  ExactNumber total() const;
  ExactNumber success_mass() const { return ExactNumber(1) - reject_mass; }
  ExactNumber probability(const std::string& path) const;
  /// Distribution given success; reject mass becomes 0.
  DistTable conditioned() const;
  std::string json() const;
};

/// Explores every outcome of `attempt`, run on a copy of `start`, by
/// replaying it under all choice sequences with nonzero probability.
DistTable explore(const Path& start, const std::function<bool(Path&, ChoiceSource&)>& attempt);

/// recover on a fixed Łukasiewicz path; `c` selects the colored recovery.
DistTable exact_recover_dist(const Path& w, const std::optional<Rational>& c = std::nullopt);
DistTable exact_extend_dist(const Path& w);
/// One attempt of the sampler from the empty path, unconditioned.
DistTable exact_attempt_dist(const SamplerSpec& spec, std::size_t n);
/// Output law of the sampler with restarts, i.e. the attempt law given
/// success.
DistTable exact_sampler_dist(const SamplerSpec& spec, std::size_t n);

struct SuccessProbability {
  /// Probability that one attempt outputs a given path of length n.
  ExactNumber p_n;
  /// Probability that the first attempt succeeds.
  double success;
};

/// Closed forms: p_n = 3^{-n} ∏_{i≤n} (2i+2)/(2i+1) and success p_n·M_n for
/// Motzkin positive paths; p_n = r^n ∏_{i≤⌈n/2⌉} (2i+r)/(2i−1+r) and
/// success p_n·(S_n + r·S_{n−1}) for the approximate Schröder sampler.
SuccessProbability success_probability_exact(Model model, std::size_t n);

/// lim p_n·M_n = √3/2.
double motzkin_success_limit();
/// 2^{1/4}/√π · Γ(√2/2)/Γ((1+√2)/2).
double schroeder_success_limit();

}  // namespace latticegen
