#include "latticegen/motzkin.hpp"

#include <limits>

#include "latticegen/error.hpp"
#include "latticegen/transforms.hpp"

namespace latticegen {

ExactNumber MotzkinParams::q(std::size_t m) const {
  const Rational twice_m(static_cast<unsigned long>(2 * m));
  if (!c) return ExactNumber(Rational(1) / (twice_m + 1));
  return ExactNumber(Rational(1) / (twice_m + (*c > 1 ? *c : Rational(1))));
}

bool recover_motzkin(Path& w, ChoiceSource& src) {
  expects(w.height() == -1, "recover needs a Łukasiewicz path");
  const std::size_t n = w.size();
  const std::uint64_t j = src.uniform_int(2 * n + 1);
  if (j < n) {
    unfold_in_place(w, j);
    return true;
  }
  if (j < 2 * n) {
    unfold_in_place(w, j - n);
    flip_in_place(w);
    return true;
  }
  return flip_in_place(w) && w.height() >= 0;
}

namespace {

// Whether the last U-or-F step (skipping trailing D and C steps) is an F.
bool flippable_step_is_flat(Path& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    const Step s = w.read(i);
    if (s == Step::U) return false;
    if (s == Step::F) return true;
  }
  return false;
}

}  // namespace

bool recover_colored(Path& w, const Rational& c, ChoiceSource& src) {
  expects(w.height() == -1 && !w.empty() && w.back() == Step::D,
          "colored recover needs a Łukasiewicz path ending with D");
  const std::size_t n = w.size();
  const Integer& P = c.get_num();
  const Integer& Q = c.get_den();
  expects(P.fits_ulong_p() && Q.fits_ulong_p(), "flat weight too large");
  const std::uint64_t p = P.get_ui();
  const std::uint64_t q = Q.get_ui();
  const std::uint64_t slot_cells = 2 * static_cast<std::uint64_t>(n) * q;
  expects(q != 0 && slot_cells / q == 2 * static_cast<std::uint64_t>(n) &&
              slot_cells <= std::numeric_limits<std::uint64_t>::max() / 4 - std::max(p, q),
          "colored recover range overflow");
  const std::uint64_t j = src.uniform_int(slot_cells + std::max(p, q));
  if (j < slot_cells) {
    const std::uint64_t slot = j / q;
    if (slot < n) {
      unfold_in_place(w, slot);
    } else {
      unfold_in_place(w, slot - n);
      flip_in_place(w);
    }
    return true;
  }
  const std::uint64_t rest = j - slot_cells;
  if (flippable_step_is_flat(w)) {
    if (rest >= q) return false;
    flip_in_place(w);
    return true;
  }
  if (rest >= p) return false;
  w.set(w.size() - 1, Step::C);
  return true;
}

bool try_motzkin_positive(Path& p, const MotzkinParams& params, ChoiceSource& src) {
  const StepLaw law = StepLaw::for_model(params.model(), params.c);
  for (std::size_t i = 0; i < params.n; ++i) {
    p.push(src.draw_step(law));
    if (p.height() == -1) {
      const bool ok = params.c ? recover_colored(p, *params.c, src) : recover_motzkin(p, src);
      if (!ok) return false;
    }
  }
  return true;
}

bool try_motzkin_excursion(Path& p, const MotzkinParams& params, ChoiceSource& src) {
  MotzkinParams longer = params;
  longer.n = params.n + 1;
  if (!try_motzkin_positive(p, longer, src)) return false;
  if (p.height() % 2 == 0) {
    if (!flip_in_place(p) || p.height() < 1) return false;
  }
  fold_in_place(p);
  p.truncate();
  return true;
}

Path sample_motzkin_positive(const MotzkinParams& params, ChoiceSource& src, RunStats* stats) {
  expects(params.n >= 1, "positive Motzkin sampler needs n ≥ 1");
  expects(!params.c || sgn(*params.c) > 0, "flat weight must be positive");
  return retry_until_success(
      params.model(), [&](Path& p) { return try_motzkin_positive(p, params, src); }, stats);
}

Path sample_motzkin_excursion(const MotzkinParams& params, ChoiceSource& src, RunStats* stats) {
  expects(!params.c || sgn(*params.c) > 0, "flat weight must be positive");
  return retry_until_success(
      params.model(), [&](Path& p) { return try_motzkin_excursion(p, params, src); }, stats);
}

}  // namespace latticegen
