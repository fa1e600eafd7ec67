#pragma once

#include <cstddef>

#include "latticegen/exact_number.hpp"
#include "latticegen/path.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/run.hpp"

namespace latticegen {

/// q_m = 1/(m + r), the recovery slot probability at odd geometric length m.
ExactNumber schroeder_q(std::size_t m);

/// Random extension to geometric length ℓ+1: append U (r), append D (r), or
/// with probability r² turn the last step into F, recursing past trailing
/// flat steps. Runs iteratively over the trailing F-run. Returns false when
/// the recursion bottoms out on the empty path.
bool extend_in_place(Path& p, ChoiceSource& src);

/// Recovery of a Łukasiewicz Schröder path of odd length m. A bernoulli
/// m/(m+r) picks slot mode, otherwise the final D becomes F. In slot mode a
/// uniform index below |w| unfolds at that split; the remaining |w|_F
/// indices mark a flat step (counted from the right), which is dropped
/// before unfolding, then the path is extended, kept only at height ≥ 2,
/// and closed with F.
bool recover_schroeder(Path& w, ChoiceSource& src);

// Single attempts; `p` must start empty, `false` is a rejection.

/// Positive path of length n or n−1 (a final F overshooting to n+1 is
/// trimmed).
bool try_schroeder_approx(Path& p, std::size_t n, ChoiceSource& src);
bool try_schroeder_positive_odd(Path& p, std::size_t n, ChoiceSource& src);
bool try_schroeder_excursion(Path& p, std::size_t n, ChoiceSource& src);
bool try_schroeder_positive_even(Path& p, std::size_t n, ChoiceSource& src);
bool try_little_excursion(Path& p, std::size_t n, ChoiceSource& src);
bool try_little_positive_even(Path& p, std::size_t n, ChoiceSource& src);
bool try_little_positive_odd(Path& p, std::size_t n, ChoiceSource& src);
/// Dispatches on the parity of n.
bool try_schroeder_positive(Path& p, std::size_t n, ChoiceSource& src);
bool try_little_positive(Path& p, std::size_t n, ChoiceSource& src);

// Samplers with restarts. `n` is always the geometric length.

Path sample_schroeder_approx(std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);
Path sample_schroeder_positive(std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);
Path sample_schroeder_excursion(std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);
Path sample_little_excursion(std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);
Path sample_little_positive(std::size_t n, ChoiceSource& src, RunStats* stats = nullptr);

}  // namespace latticegen
