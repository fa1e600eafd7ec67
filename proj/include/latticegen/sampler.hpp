#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "latticegen/exact_number.hpp"
#include "latticegen/path.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/run.hpp"

namespace latticegen {

enum class Family { Dyck, Motzkin, ColoredMotzkin, Schroeder, LittleSchroeder };
enum class Kind {
  Positive,
  Excursion,
  /// Schröder positive path of length n or n−1 (no exact-length fix-up).
  Approximate,
};
enum class Method { Recovery, Florentine };

/// Which sampler to run. `weight` is the C-step weight for colored paths.
struct SamplerSpec {
  Family family = Family::Motzkin;
  Kind kind = Kind::Positive;
  Method method = Method::Recovery;
  std::optional<Rational> weight;

  Model model() const noexcept;
  /// Human-readable name, e.g. "schroeder excursion (recovery)".
  std::string name() const;
};

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Kind k) noexcept;
std::string_view to_string(Method m) noexcept;
std::optional<Family> family_from_string(std::string_view s) noexcept;
std::optional<Kind> kind_from_string(std::string_view s) noexcept;
std::optional<Method> method_from_string(std::string_view s) noexcept;

/// Throws ContractViolation when (spec, n) is not a supported combination,
/// e.g. an odd-length Schröder excursion or a weight outside the colored
/// model.
void validate(const SamplerSpec& spec, std::size_t n);

/// One attempt from the empty path; false means the attempt rejected.
bool try_sample(const SamplerSpec& spec, std::size_t n, Path& p, ChoiceSource& src);

/// Full sampler with restarts.
Path sample(const SamplerSpec& spec, std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);

}  // namespace latticegen
