#include "latticegen/transforms.hpp"

#include <vector>

#include "latticegen/error.hpp"

namespace latticegen {

void unfold_in_place(Path& p, std::size_t split) {
  const std::size_t end = p.size();
  expects(split < end, "unfold needs a nonempty right factor");
  const std::int64_t height_before = p.height();
  // Forward pass with a one-step carry: τ̃[0] = U and τ̃[i+1] is τ[i] with
  // first-passage D steps turned into U. The final D of τ falls off the end.
  Step carry = Step::U;
  std::int64_t rel = 0;
  std::int64_t low = 0;
  for (std::size_t i = split; i < end; ++i) {
    const Step cur = p.at(i);
    p.set(i, carry);
    rel += height_delta(cur);
    if (cur == Step::D && rel < low) {
      low = rel;
      carry = Step::U;
    } else {
      carry = cur;
    }
  }
  expects(rel == low && rel < 0, "unfold input is not Łukasiewicz at the split");
  const std::int64_t sigma_height = height_before - rel;
  p.refresh_first_flat(split, sigma_height);
}

std::size_t unfold_at_flat(Path& p, std::size_t rank) {
  const std::size_t end = p.size();
  expects(end >= 2 && p.at(end - 1) == Step::D, "marked-flat unfold needs a path ending with D");
  // Level after each step of τ, measured from the end of the path. A D step
  // of τ is a first passage iff every earlier level of τ (including its
  // start) is strictly higher; the stack keeps the surviving candidates
  // with levels increasing towards the top.
  struct Candidate {
    std::size_t index;
    std::int64_t level;
  };
  std::vector<Candidate> stack;
  std::int64_t level = 0;  // level after the cell being visited
  std::size_t seen_flats = 0;
  std::size_t flat = Path::npos;
  for (std::size_t i = end; i-- > 0;) {
    const Step s = p.read(i);
    if (s == Step::F && seen_flats++ == rank) {
      flat = i;
      break;
    }
    while (!stack.empty() && stack.back().level >= level) stack.pop_back();
    if (s == Step::D) stack.push_back({i, level});
    level -= height_delta(s);
  }
  expects(flat != Path::npos, "not enough flat steps to mark");
  // `level` is now the start of τ; drop candidates it does not undercut.
  while (!stack.empty() && stack.back().level >= level) stack.pop_back();
  expects(!stack.empty() && stack.front().index == end - 1, "marked-flat unfold input is not Łukasiewicz");
  // The start of τ sits `level` above the end, so h(σ) = h(σFτ) + level.
  const std::int64_t sigma_height = p.height() + level;
  p.set(flat, Step::U);
  for (std::size_t k = 1; k < stack.size(); ++k) p.set(stack[k].index, Step::U);
  p.truncate();
  p.refresh_first_flat(flat, sigma_height);
  return flat;
}

namespace {

struct FoldScan {
  std::size_t split;
  std::int64_t k;
};

// Walks τ̃ backwards from the end. `visit(i, old, marker, leading)` is called
// for every cell of τ̃; markers are the last-passage U steps, the leading
// one sitting at the last visit of height k.
template <class Visit>
FoldScan fold_scan(Path& p, Visit&& visit) {
  const std::int64_t h = p.height();
  expects(h > 0 && h % 2 == 1, "fold needs a path of odd positive height");
  const std::int64_t k = (h - 1) / 2;
  std::int64_t after = h;
  std::int64_t low = h;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Step old = p.at(i);
    const std::int64_t before = after - height_delta(old);
    low = std::min(low, after);
    const bool marker = old == Step::U && before < low;
    const bool leading = marker && before == k;
    visit(i, old, marker, leading);
    if (leading) return {i, k};
    expects(before >= 0, "fold needs a positive path");
    after = before;
  }
  throw ContractViolation("fold needs a positive path");
}

}  // namespace

std::size_t fold_in_place(Path& p) {
  // Backward pass with a one-step carry: cell i receives τ̃[i+1] with
  // markers turned back into D; the last cell receives the appended D.
  Step carry = Step::D;
  const FoldScan scan = fold_scan(p, [&](std::size_t i, Step old, bool marker, bool) {
    p.set(i, carry);
    carry = marker ? Step::D : old;
  });
  p.refresh_first_flat(scan.split, scan.k);
  return scan.split;
}

std::size_t fold_inserting_flat(Path& p) {
  const FoldScan scan = fold_scan(p, [&](std::size_t i, Step, bool marker, bool leading) {
    if (leading) {
      p.set(i, Step::F);
    } else if (marker) {
      p.set(i, Step::D);
    } else {
      ++p.meter().reads;
    }
  });
  p.refresh_first_flat(scan.split, scan.k);
  return scan.split;
}

bool flip_in_place(Path& p) {
  const bool colored = p.model() == Model::ColoredMotzkin;
  std::size_t i = p.size();
  std::uint64_t scanned = 0;
  while (i > 0) {
    const Step s = p.at(i - 1);
    if (s == Step::U || s == Step::F) break;
    if (s == Step::C && !colored) break;
    --i;
    ++scanned;
  }
  p.meter().reads += scanned;
  if (i == 0 || (p.at(i - 1) != Step::U && p.at(i - 1) != Step::F)) return false;
  p.set(i - 1, p.at(i - 1) == Step::U ? Step::F : Step::U);
  return true;
}

void lift_in_place(Path& p) {
  auto first = p.first_flat_at_zero();
  expects(first.has_value(), "lift needs a non-little Schröder path");
  const std::size_t at = *first;
  p.set(at, Step::U);
  // Everything after the lifted step is one unit higher, hence no F at 0.
  p.clear_first_flat_from(at);
}

Path unfold(const Path& sigma, const Path& tau) {
  expects(sigma.model() == tau.model(), "unfold: mixed path models");
  expects(!tau.empty(), "unfold: τ must be nonempty");
  Path joined = sigma;
  for (Step s : tau.steps()) joined.push(s);
  expects(classify(joined) == PathClass::Lukasiewicz, "unfold: σ·τ must be Łukasiewicz");
  joined.meter() = {};
  unfold_in_place(joined, sigma.size());
  return joined;
}

std::pair<Path, Path> fold(const Path& p) {
  expects(is_positive(p), "fold: path must be positive");
  Path work = p;
  const std::size_t split = fold_in_place(work);
  Path sigma(p.model());
  Path tau(p.model());
  for (std::size_t i = 0; i < work.size(); ++i) (i < split ? sigma : tau).push(work.at(i));
  sigma.meter() = {};
  tau.meter() = {};
  return {std::move(sigma), std::move(tau)};
}

std::optional<Path> flip(const Path& p) {
  expects(p.model() == Model::Motzkin || p.model() == Model::ColoredMotzkin,
          "flip is defined on Motzkin paths");
  Path out = p;
  if (!flip_in_place(out)) return std::nullopt;
  return out;
}

Path lift(const Path& p) {
  expects(p.model() == Model::Schroeder, "lift is defined on Schröder paths");
  Path out = p;
  lift_in_place(out);
  return out;
}

}  // namespace latticegen
