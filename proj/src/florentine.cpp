#include "latticegen/florentine.hpp"

#include "latticegen/error.hpp"

namespace latticegen {

bool try_florentine_positive(Path& p, const StepLaw& law, std::size_t n, ChoiceSource& src) {
  while (p.geo_len() < n) {
    p.push(src.draw_step(law));
    if (p.height() < 0) return false;
  }
  if (p.geo_len() == n + 1) p.truncate();
  return true;
}

Path florentine_positive(Model model, std::size_t n, ChoiceSource& src, RunStats* stats,
                         const std::optional<Rational>& c) {
  expects(n >= 1, "anticipated-rejection sampler needs n ≥ 1");
  const StepLaw law = StepLaw::for_model(model, c);
  return retry_until_success(
      model, [&](Path& p) { return try_florentine_positive(p, law, n, src); }, stats);
}

}  // namespace latticegen
