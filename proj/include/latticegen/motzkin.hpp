#pragma once

#include <cstddef>
#include <optional>

#include "latticegen/exact_number.hpp"
#include "latticegen/path.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/run.hpp"

namespace latticegen {

/// Target length and, for colored paths, the weight c of the C step.
struct MotzkinParams {
  std::size_t n = 0;
  std::optional<Rational> c;

  Model model() const noexcept { return c ? Model::ColoredMotzkin : Model::Motzkin; }
  /// Recovery slot probability at length m: 1/(2m+1), or 1/(2m + max(1,c))
  /// when colored.
  ExactNumber q(std::size_t m) const;
};

// Recovery on a Łukasiewicz path of length n. On success the path has been
// rewritten into a positive path of the same length; `false` is a rejection.

/// Uniform j in [0, 2n+1): j < n unfolds at split j, n ≤ j < 2n unfolds at
/// j−n then flips, j = 2n keeps flip(w) when it stays positive.
bool recover_motzkin(Path& w, ChoiceSource& src);

/// Colored recovery. All slot probabilities are multiples of 1/D with
/// D = Q(2n) + max(P, Q) for c = P/Q, so a single uniform draw over D cells
/// picks the case: Q cells per split slot, then Q cells for flip(w) when
/// the flippable step is F, or P cells for ωD ↦ ωC otherwise. Leftover
/// cells reject.
bool recover_colored(Path& w, const Rational& c, ChoiceSource& src);

/// One attempt of the positive-path sampler; `p` must start empty.
bool try_motzkin_positive(Path& p, const MotzkinParams& params, ChoiceSource& src);
/// One attempt of the excursion sampler (positive path of length n+1,
/// parity fix by flip, fold, drop the final D).
bool try_motzkin_excursion(Path& p, const MotzkinParams& params, ChoiceSource& src);

/// Uniform (plain) or weight-proportional (colored) positive path of length n.
Path sample_motzkin_positive(const MotzkinParams& params, ChoiceSource& src,
                             RunStats* stats = nullptr);
/// Uniform (plain) or weight-proportional (colored) excursion of length n.
Path sample_motzkin_excursion(const MotzkinParams& params, ChoiceSource& src,
                              RunStats* stats = nullptr);

}  // namespace latticegen
