#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "latticegen/path.hpp"

namespace latticegen {

// In-place forms operate on the sampler's working path and are metered.
// Value forms validate their arguments fully and are meant for callers
// outside the samplers.

/// Turns the Łukasiewicz path σ·τ (|σ| = split, τ nonempty) into the
/// positive path σ·τ̃ of odd height, with τ̃ = Uτ_k⋯Uτ_0 for
/// τ = τ_k D ⋯ τ_0 D. Single forward pass; |τ| cells written.
void unfold_in_place(Path& p, std::size_t split);

/// Schröder variant for a marked flat step: σFτ ↦ σ·τ̃, where σFτ is
/// Łukasiewicz and the marked F is the `rank`-th F counted from the right
/// (0-based). One backward pass locates the F and collects the
/// first-passage D steps of τ on a monotone stack; cells keep their
/// positions, so only those D steps and the F are rewritten. Returns the
/// index of the marked F.
std::size_t unfold_at_flat(Path& p, std::size_t rank);

/// Inverse of unfold: p positive with height 2k+1 becomes the Łukasiewicz
/// path σ·τ. Returns |σ|, the position of the last visit at height k.
/// One backward pass over τ̃, |τ̃| cells written.
std::size_t fold_in_place(Path& p);

/// For p = σ·τ̃ positive of odd height: rewrites p into σFτ minus its final
/// D step, without shifting cells. Returns |σ|.
std::size_t fold_inserting_flat(Path& p);

/// Parity-changing swap U↔F of the last flippable step. Plain models skip
/// trailing D steps; the colored model also skips trailing C steps. Returns
/// false, leaving p untouched, when no flippable step exists.
bool flip_in_place(Path& p);

/// Replaces the first F at height 0 by U, in constant time.
void lift_in_place(Path& p);

Path unfold(const Path& sigma, const Path& tau);
std::pair<Path, Path> fold(const Path& p);
std::optional<Path> flip(const Path& p);
Path lift(const Path& p);

}  // namespace latticegen
