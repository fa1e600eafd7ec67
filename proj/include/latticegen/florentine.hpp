#pragma once

#include <cstddef>
#include <optional>

#include "latticegen/path.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/run.hpp"

namespace latticegen {

/// Anticipated rejection: draw steps until the target length is reached,
/// discarding the whole path and starting over as soon as it dips below
/// zero. Schröder paths use the same overshoot trim as the approximate
/// recovery sampler, so they come out with length n or n−1.
bool try_florentine_positive(Path& p, const StepLaw& law, std::size_t n, ChoiceSource& src);

Path florentine_positive(Model model, std::size_t n, ChoiceSource& src, RunStats* stats = nullptr,
                         const std::optional<Rational>& c = std::nullopt);

}  // namespace latticegen
