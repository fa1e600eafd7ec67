#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace latticegen {

/// Step alphabet. `C` is the weighted (colored) flat step of the colored
/// Motzkin model.
enum class Step : std::uint8_t { U, F, D, C };

/// Path families. Dyck is only used by the anticipated-rejection baseline.
enum class Model : std::uint8_t { Dyck, Motzkin, ColoredMotzkin, Schroeder };

constexpr int height_delta(Step s) noexcept {
  switch (s) {
    case Step::U: return 1;
    case Step::D: return -1;
    default: return 0;
  }
}

/// Geometric length of a step: flat steps are twice as long in Schröder paths.
constexpr int geometric_length(Step s, Model m) noexcept {
  return (s == Step::F && m == Model::Schroeder) ? 2 : 1;
}

constexpr bool is_legal(Step s, Model m) noexcept {
  switch (m) {
    case Model::Dyck: return s == Step::U || s == Step::D;
    case Model::ColoredMotzkin: return true;
    default: return s != Step::C;
  }
}

constexpr char to_char(Step s) noexcept {
  constexpr char tags[] = {'U', 'F', 'D', 'C'};
  return tags[static_cast<int>(s)];
}

constexpr std::optional<Step> step_from_char(char c) noexcept {
  switch (c) {
    case 'U': return Step::U;
    case 'F': return Step::F;
    case 'D': return Step::D;
    case 'C': return Step::C;
    default: return std::nullopt;
  }
}

std::string_view to_string(Model m) noexcept;
std::optional<Model> model_from_string(std::string_view name) noexcept;

}  // namespace latticegen
