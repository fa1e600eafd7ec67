#include "latticegen/sampler.hpp"

#include "latticegen/error.hpp"
#include "latticegen/florentine.hpp"
#include "latticegen/motzkin.hpp"
#include "latticegen/schroeder.hpp"

namespace latticegen {

Model SamplerSpec::model() const noexcept {
  switch (family) {
    case Family::Dyck: return Model::Dyck;
    case Family::Motzkin: return Model::Motzkin;
    case Family::ColoredMotzkin: return Model::ColoredMotzkin;
    case Family::Schroeder:
    case Family::LittleSchroeder: return Model::Schroeder;
  }
  return Model::Motzkin;
}

std::string SamplerSpec::name() const {
  std::string out(to_string(family));
  out += ' ';
  out += to_string(kind);
  out += " (";
  out += to_string(method);
  out += ')';
  return out;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Dyck: return "dyck";
    case Family::Motzkin: return "motzkin";
    case Family::ColoredMotzkin: return "motzkin-colored";
    case Family::Schroeder: return "schroeder";
    case Family::LittleSchroeder: return "schroeder-little";
  }
  return "?";
}

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::Positive: return "positive";
    case Kind::Excursion: return "excursion";
    case Kind::Approximate: return "approximate";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  return m == Method::Recovery ? "recovery" : "florentine";
}

std::optional<Family> family_from_string(std::string_view s) noexcept {
  for (Family f : {Family::Dyck, Family::Motzkin, Family::ColoredMotzkin, Family::Schroeder,
                   Family::LittleSchroeder}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

std::optional<Kind> kind_from_string(std::string_view s) noexcept {
  for (Kind k : {Kind::Positive, Kind::Excursion, Kind::Approximate}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<Method> method_from_string(std::string_view s) noexcept {
  for (Method m : {Method::Recovery, Method::Florentine}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

void validate(const SamplerSpec& spec, std::size_t n) {
  const bool colored = spec.family == Family::ColoredMotzkin;
  expects(colored == spec.weight.has_value(),
          colored ? "motzkin-colored needs a weight" : "a weight is only accepted with motzkin-colored");
  if (spec.weight) expects(sgn(*spec.weight) > 0, "weight must be a positive rational");
  if (spec.method == Method::Florentine) {
    expects(spec.kind == Kind::Positive, "the anticipated-rejection baseline samples positive paths only");
    expects(spec.family != Family::LittleSchroeder, "no anticipated-rejection baseline for little paths");
    expects(n >= 1, "length must be at least 1");
    return;
  }
  expects(spec.family != Family::Dyck, "Dyck paths are only available with the florentine baseline");
  const bool schroeder = spec.family == Family::Schroeder || spec.family == Family::LittleSchroeder;
  switch (spec.kind) {
    case Kind::Positive:
      expects(n >= 1, "length must be at least 1");
      break;
    case Kind::Excursion:
      if (schroeder) expects(n % 2 == 0, "Schröder excursions need an even length");
      break;
    case Kind::Approximate:
      expects(spec.family == Family::Schroeder, "approximate kind is only defined for schroeder");
      expects(n >= 1, "length must be at least 1");
      break;
  }
}

bool try_sample(const SamplerSpec& spec, std::size_t n, Path& p, ChoiceSource& src) {
  if (spec.method == Method::Florentine) {
    const StepLaw law = StepLaw::for_model(spec.model(), spec.weight);
    return try_florentine_positive(p, law, n, src);
  }
  switch (spec.family) {
    case Family::Motzkin:
    case Family::ColoredMotzkin: {
      const MotzkinParams params{n, spec.weight};
      return spec.kind == Kind::Positive ? try_motzkin_positive(p, params, src)
                                         : try_motzkin_excursion(p, params, src);
    }
    case Family::Schroeder:
      switch (spec.kind) {
        case Kind::Positive: return try_schroeder_positive(p, n, src);
        case Kind::Excursion: return try_schroeder_excursion(p, n, src);
        case Kind::Approximate: return try_schroeder_approx(p, n, src);
      }
      break;
    case Family::LittleSchroeder:
      return spec.kind == Kind::Positive ? try_little_positive(p, n, src)
                                         : try_little_excursion(p, n, src);
    case Family::Dyck: break;
  }
  throw ContractViolation("unsupported sampler");
}

Path sample(const SamplerSpec& spec, std::size_t n, ChoiceSource& src, RunStats* stats) {
  validate(spec, n);
  if (spec.method == Method::Florentine) {
    return florentine_positive(spec.model(), n, src, stats, spec.weight);
  }
  return retry_until_success(
      spec.model(), [&](Path& p) { return try_sample(spec, n, p, src); }, stats);
}

}  // namespace latticegen
