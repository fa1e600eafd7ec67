#include "latticegen/schroeder.hpp"

#include "latticegen/error.hpp"
#include "latticegen/transforms.hpp"

namespace latticegen {

ExactNumber schroeder_q(std::size_t m) {
  return ExactNumber(1) / (ExactNumber(static_cast<long>(m)) + ExactNumber::r());
}

bool extend_in_place(Path& p, ChoiceSource& src) {
  const StepLaw& law = StepLaw::schroeder();
  std::size_t run_start = p.size();  // cells [run_start, size) are stripped flats
  for (;;) {
    const Step s = src.draw_step(law);
    if (s != Step::F) {
      // ω F^d ↦ ω s F^d: write s over the first flat, append a flat.
      const std::int64_t height_at = p.height();
      if (run_start == p.size()) {
        p.push(s);
      } else {
        p.set(run_start, s);
        p.push(Step::F);
      }
      p.refresh_first_flat(run_start, height_at);
      return true;
    }
    if (run_start == 0) return false;
    const Step last = p.at(run_start - 1);
    if (last == Step::F) {
      ++p.meter().reads;
      --run_start;
      continue;
    }
    const std::int64_t height_at = p.height() - height_delta(last);
    p.set(run_start - 1, Step::F);
    p.refresh_first_flat(run_start - 1, height_at);
    return true;
  }
}

bool recover_schroeder(Path& w, ChoiceSource& src) {
  expects(w.height() == -1, "recover needs a Łukasiewicz path");
  const std::size_t m = w.geo_len();
  const ExactNumber slot_mode =
      ExactNumber(static_cast<long>(m)) / (ExactNumber(static_cast<long>(m)) + ExactNumber::r());
  if (!src.bernoulli(slot_mode)) {
    const std::size_t last = w.size() - 1;
    w.set(last, Step::F);
    w.refresh_first_flat(last, 0);
    return true;
  }
  const std::uint64_t i = src.uniform_int(m);
  if (i < w.size()) {
    unfold_in_place(w, i);
    return true;
  }
  unfold_at_flat(w, i - w.size());
  if (!extend_in_place(w, src) || w.height() < 2) return false;
  w.push(Step::F);
  return true;
}

bool try_schroeder_approx(Path& p, std::size_t n, ChoiceSource& src) {
  const StepLaw& law = StepLaw::schroeder();
  while (p.geo_len() < n) {
    p.push(src.draw_step(law));
    if (p.height() == -1 && !recover_schroeder(p, src)) return false;
  }
  if (p.geo_len() == n + 1) p.truncate();
  return true;
}

bool try_schroeder_positive_odd(Path& p, std::size_t n, ChoiceSource& src) {
  if (!try_schroeder_approx(p, n, src)) return false;
  if (p.geo_len() + 1 == n) {
    if (!extend_in_place(p, src) || p.height() < 1) return false;
  }
  return true;
}

bool try_schroeder_excursion(Path& p, std::size_t n, ChoiceSource& src) {
  if (!try_schroeder_approx(p, n, src)) return false;
  if (p.geo_len() == n) {
    if (!extend_in_place(p, src) || p.height() < 1) return false;
    fold_in_place(p);
    p.truncate();
  } else {
    fold_inserting_flat(p);
  }
  return true;
}

bool try_schroeder_positive_even(Path& p, std::size_t n, ChoiceSource& src) {
  const ExactNumber next(static_cast<long>(n + 1));
  if (src.bernoulli(next / (next + ExactNumber::r()))) {
    if (!try_schroeder_approx(p, n, src)) return false;
    if (p.geo_len() + 1 == n) {
      if (!extend_in_place(p, src) || p.height() < 2) return false;
    }
    return true;
  }
  return try_schroeder_excursion(p, n, src);
}

bool try_little_excursion(Path& p, std::size_t n, ChoiceSource& src) {
  if (!try_schroeder_excursion(p, n, src)) return false;
  if (!p.is_little()) {
    lift_in_place(p);
    p.push(Step::D);
  }
  return true;
}

bool try_little_positive_even(Path& p, std::size_t n, ChoiceSource& src) {
  if (!try_schroeder_positive_even(p, n, src)) return false;
  if (!p.is_little()) {
    lift_in_place(p);
    if (!extend_in_place(p, src) || !p.is_little()) return false;
  }
  return true;
}

bool try_little_positive_odd(Path& p, std::size_t n, ChoiceSource& src) {
  if (n > 1 && !try_little_positive_even(p, n - 1, src)) return false;
  if (!extend_in_place(p, src)) return false;
  const std::size_t size = p.size();
  if (p.back() == Step::F && p.height() == 1) return false;
  if (p.height() == -1) {
    // Only σDD can land here (the input is little); σ = ε has no partner.
    if (size < 2 || p.at(size - 2) != Step::D) return false;
    p.truncate();
    p.set(size - 2, Step::F);
  }
  return true;
}

bool try_schroeder_positive(Path& p, std::size_t n, ChoiceSource& src) {
  return n % 2 == 1 ? try_schroeder_positive_odd(p, n, src) : try_schroeder_positive_even(p, n, src);
}

bool try_little_positive(Path& p, std::size_t n, ChoiceSource& src) {
  return n % 2 == 1 ? try_little_positive_odd(p, n, src) : try_little_positive_even(p, n, src);
}

namespace {

template <class Attempt>
Path with_restarts(Attempt&& attempt, RunStats* stats) {
  return retry_until_success(Model::Schroeder, std::forward<Attempt>(attempt), stats);
}

}  // namespace

Path sample_schroeder_approx(std::size_t n, ChoiceSource& src, RunStats* stats) {
  expects(n >= 1, "approximate-length sampler needs n ≥ 1");
  return with_restarts([&](Path& p) { return try_schroeder_approx(p, n, src); }, stats);
}

Path sample_schroeder_positive(std::size_t n, ChoiceSource& src, RunStats* stats) {
  expects(n >= 1, "positive Schröder sampler needs n ≥ 1");
  return with_restarts([&](Path& p) { return try_schroeder_positive(p, n, src); }, stats);
}

Path sample_schroeder_excursion(std::size_t n, ChoiceSource& src, RunStats* stats) {
  expects(n % 2 == 0, "Schröder excursions need an even length");
  return with_restarts([&](Path& p) { return try_schroeder_excursion(p, n, src); }, stats);
}

Path sample_little_excursion(std::size_t n, ChoiceSource& src, RunStats* stats) {
  expects(n % 2 == 0, "Schröder excursions need an even length");
  return with_restarts([&](Path& p) { return try_little_excursion(p, n, src); }, stats);
}

Path sample_little_positive(std::size_t n, ChoiceSource& src, RunStats* stats) {
  expects(n >= 1, "little positive sampler needs n ≥ 1");
  return with_restarts([&](Path& p) { return try_little_positive(p, n, src); }, stats);
}

}  // namespace latticegen
