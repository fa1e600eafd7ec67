#include "latticegen/verification.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "latticegen/error.hpp"
#include "latticegen/metrics.hpp"
#include "latticegen/oracles.hpp"
#include "latticegen/transforms.hpp"

namespace latticegen {

namespace {

using Law = std::map<std::string, ExactNumber>;

std::string describe(const std::string& what, std::size_t n) { return what + " n=" + std::to_string(n); }

CheckResult make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

// Sum of `dist(w)` over the inputs, each scaled by `scale(w)`.
Law aggregate(const std::vector<Path>& inputs, const std::function<DistTable(const Path&)>& dist,
              const std::function<ExactNumber(const Path&)>& scale) {
  Law out;
  for (const Path& w : inputs) {
    const DistTable t = dist(w);
    const ExactNumber s = scale(w);
    for (const auto& [k, p] : t.entries) out[k] += s * p;
  }
  return out;
}

ExactNumber unit(const Path&) { return ExactNumber(1); }

// Compares `got` with `want` on the keys of `want`; with `exhaustive`, any
// extra key in `got` is also a mismatch.
std::string compare_laws(const Law& got, const Law& want, bool exhaustive) {
  for (const auto& [k, p] : want) {
    const auto it = got.find(k);
    const ExactNumber v = it == got.end() ? ExactNumber(0) : it->second;
    if (!(v == p)) return k + ": got " + v.to_string() + ", want " + p.to_string();
  }
  if (exhaustive) {
    for (const auto& [k, p] : got) {
      if (!want.contains(k)) return "unexpected output " + k + " with probability " + p.to_string();
    }
  }
  return {};
}

PathKind target_kind(const SamplerSpec& spec) {
  const bool excursion = spec.kind == Kind::Excursion;
  if (spec.family == Family::LittleSchroeder) {
    return excursion ? PathKind::LittleExcursion : PathKind::LittlePositive;
  }
  return excursion ? PathKind::Excursion : PathKind::Positive;
}

// Exact output law the sampler is meant to produce.
Law target_law(const SamplerSpec& spec, std::size_t n) {
  Law law;
  const Model model = spec.model();
  const bool mixed = spec.family == Family::Schroeder &&
                     (spec.kind == Kind::Approximate || spec.method == Method::Florentine);
  ExactNumber total;
  auto add = [&](const std::vector<Path>& paths, const ExactNumber& scale) {
    for (const Path& p : paths) {
      const ExactNumber w = spec.weight ? scale * ExactNumber(weight(p, *spec.weight)) : scale;
      law[p.text()] = w;
      total += w;
    }
  };
  add(enumerate(model, target_kind(spec), n), ExactNumber(1));
  if (mixed) add(enumerate(model, PathKind::Positive, n - 1), ExactNumber::r());
  for (auto& [_, p] : law) p /= total;
  return law;
}

std::string law_summary(const Law& law) {
  std::set<std::string> values;
  for (const auto& [_, p] : law) values.insert(p.to_string());
  std::string out = std::to_string(law.size()) + " paths";
  if (values.size() == 1) out += ", each " + *values.begin();
  return out;
}

CheckResult lemma_result(const std::string& name, const std::string& mismatch, std::size_t inputs,
                         std::size_t targets) {
  if (!mismatch.empty()) return make(name, false, mismatch);
  return make(name, true, std::to_string(inputs) + " inputs, " + std::to_string(targets) + " outputs exact");
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << suite << ": " << (passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string SuiteReport::json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  auto& arr = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out.dump(2);
}

CheckResult check_motzkin_recover_lemma(std::size_t n) {
  const auto inputs = enumerate(Model::Motzkin, PathKind::Lukasiewicz, n);
  const Law got = aggregate(inputs, [](const Path& w) { return exact_recover_dist(w); }, unit);
  Law want;
  const ExactNumber q(Rational(1, 2 * n + 1));
  for (const Path& p : enumerate(Model::Motzkin, PathKind::Positive, n)) want[p.text()] = q;
  return lemma_result(describe("motzkin recover lemma", n), compare_laws(got, want, true), inputs.size(),
                      want.size());
}

CheckResult check_colored_recover_lemma(std::size_t n, const Rational& c) {
  const auto inputs = enumerate(Model::ColoredMotzkin, PathKind::Lukasiewicz, n);
  const Law got = aggregate(
      inputs, [&](const Path& w) { return exact_recover_dist(w, c); },
      [&](const Path& w) { return ExactNumber(weight(w, c)); });
  Law want;
  const Rational q = 1 / (Rational(2 * n) + (c > 1 ? c : Rational(1)));
  for (const Path& p : enumerate(Model::ColoredMotzkin, PathKind::Positive, n)) {
    want[p.text()] = ExactNumber(Rational(q * weight(p, c)));
  }
  return lemma_result(describe("colored recover lemma c=" + to_string(c), n), compare_laws(got, want, true),
                      inputs.size(), want.size());
}

CheckResult check_extend_lemma(std::size_t m) {
  const auto inputs = enumerate(Model::Schroeder, PathKind::Positive, m);
  const Law got = aggregate(inputs, exact_extend_dist, unit);
  Law want;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::Positive, m + 1)) {
    if (p.height() > 0) want[p.text()] = ExactNumber::r();
  }
  return lemma_result(describe("extend lemma", m), compare_laws(got, want, false), inputs.size(), want.size());
}

CheckResult check_schroeder_recover_lemma(std::size_t m) {
  expects(m % 2 == 1, "Schröder recovery acts on odd lengths");
  const auto inputs = enumerate(Model::Schroeder, PathKind::Lukasiewicz, m);
  const Law got = aggregate(inputs, [](const Path& w) { return exact_recover_dist(w); }, unit);
  const ExactNumber q = ExactNumber(1) / (ExactNumber(static_cast<long>(m)) + ExactNumber::r());
  Law want;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::Positive, m)) want[p.text()] = q;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::Positive, m + 1)) {
    if (p.back() == Step::F) want[p.text()] = q * ExactNumber::r();
  }
  return lemma_result(describe("schroeder recover lemma", m), compare_laws(got, want, true), inputs.size(),
                      want.size());
}

CheckResult check_little_extend_lemma(std::size_t m) {
  const auto inputs = enumerate(Model::Schroeder, PathKind::LittlePositive, m);
  const Law got = aggregate(inputs, exact_extend_dist, unit);
  Law want;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::LittlePositive, m + 1)) {
    if (p.height() == 1 && p.back() == Step::F) continue;
    want[p.text()] = ExactNumber::r();
  }
  return lemma_result(describe("little extend lemma", m), compare_laws(got, want, false), inputs.size(),
                      want.size());
}

CheckResult check_exact_uniformity(const SamplerSpec& spec, std::size_t n) {
  const std::string name = describe(spec.name() + (spec.weight ? " c=" + to_string(*spec.weight) : ""), n);
  const Law want = target_law(spec, n);
  const DistTable got = exact_sampler_dist(spec, n);
  const std::string mismatch = compare_laws(got.entries, want, true);
  if (!mismatch.empty()) return make(name, false, mismatch);
  return make(name, true, law_summary(want));
}

CheckResult check_attempt_probability(Model model, std::size_t n) {
  const std::string name = describe(std::string(to_string(model)) + " first-attempt probability", n);
  const SamplerSpec spec = model == Model::Schroeder ? SamplerSpec{Family::Schroeder, Kind::Approximate}
                                                     : SamplerSpec{Family::Motzkin, Kind::Positive};
  const DistTable got = exact_attempt_dist(spec, n);
  const ExactNumber p = success_probability_exact(model, n).p_n;
  Law want;
  for (const Path& w : enumerate(model, PathKind::Positive, n)) want[w.text()] = p;
  if (model == Model::Schroeder) {
    for (const Path& w : enumerate(model, PathKind::Positive, n - 1)) want[w.text()] = p * ExactNumber::r();
  }
  const std::string mismatch = compare_laws(got.entries, want, true);
  if (!mismatch.empty()) return make(name, false, mismatch);
  return make(name, true, "p_n = " + p.to_string());
}

CheckResult check_unfold_bijection(Model model, std::size_t n) {
  const std::string name = describe(std::string(to_string(model)) + " unfold bijection", n);
  std::set<std::string> images;
  std::size_t pairs = 0;
  for (const Path& w : enumerate(model, PathKind::Lukasiewicz, n)) {
    for (std::size_t split = 0; split < w.size(); ++split) {
      ++pairs;
      Path p = w;
      unfold_in_place(p, split);
      const Path sigma = Path::from_text(model, w.text().substr(0, split));
      const Path tau = Path::from_text(model, w.text().substr(split));
      if (!(unfold(sigma, tau) == p)) return make(name, false, "in-place and value unfold differ on " + w.text());
      if (!is_positive(p) || p.height() % 2 == 0) {
        return make(name, false, "unfold of " + w.text() + " is " + p.text());
      }
      images.insert(p.text());
      Path back = p;
      const std::size_t got_split = fold_in_place(back);
      if (got_split != split || !(back == w)) {
        return make(name, false, "fold does not invert unfold on " + w.text() + " at " + std::to_string(split));
      }
    }
  }
  std::size_t odd = 0;
  for (const Path& p : enumerate(model, PathKind::Positive, n)) odd += p.height() % 2 != 0 ? 1 : 0;
  if (images.size() != pairs || pairs != odd) {
    return make(name, false,
                std::to_string(pairs) + " factorizations, " + std::to_string(images.size()) + " images, " +
                    std::to_string(odd) + " positive paths of odd height");
  }
  return make(name, true, std::to_string(pairs) + " factorizations onto odd-height positive paths");
}

CheckResult check_flat_unfold(std::size_t n) {
  const std::string name = describe("schroeder marked-flat unfold", n);
  std::size_t cases = 0;
  for (const Path& w : enumerate(Model::Schroeder, PathKind::Lukasiewicz, n)) {
    const std::string text = w.text();
    for (std::size_t rank = 0; rank < w.flat_count(); ++rank) {
      ++cases;
      Path p = w;
      const std::size_t at = unfold_at_flat(p, rank);
      const std::string without_flat = text.substr(0, at) + text.substr(at + 1);
      Path expected = Path::from_text(Model::Schroeder, without_flat);
      unfold_in_place(expected, at);
      if (!(p == expected)) return make(name, false, w.text() + " rank " + std::to_string(rank) + " gave " + p.text());
      if (p.first_flat_at_zero() != scan_first_flat_at_zero(p)) {
        return make(name, false, "stale flat index after unfolding " + w.text());
      }
      Path back = p;
      if (fold_inserting_flat(back) != at || back.text() != text.substr(0, text.size() - 1)) {
        return make(name, false, "flat-inserting fold does not invert " + w.text());
      }
    }
  }
  return make(name, true, std::to_string(cases) + " marked flats");
}

CheckResult check_lift_bijection(std::size_t n) {
  const std::string name = describe("lift bijection", n);
  std::set<std::string> positive_images;
  std::size_t non_little = 0;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::Positive, n)) {
    if (p.is_little()) continue;
    ++non_little;
    const Path q = lift(p);
    if (!q.is_little() || q.geo_len() + 1 != n || q.height() < 1) {
      return make(name, false, "lift(" + p.text() + ") = " + q.text());
    }
    positive_images.insert(q.text());
  }
  std::size_t little_high = 0;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::LittlePositive, n - 1)) {
    little_high += p.height() >= 1 ? 1 : 0;
  }
  if (positive_images.size() != non_little || non_little != little_high) {
    return make(name, false, "positive paths: " + std::to_string(non_little) + " non-little, " +
                                 std::to_string(positive_images.size()) + " images, " +
                                 std::to_string(little_high) + " targets");
  }
  std::set<std::string> excursion_images;
  std::size_t non_little_exc = 0;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::Excursion, n)) {
    if (p.is_little()) continue;
    ++non_little_exc;
    excursion_images.insert(lift(p).text() + "D");
  }
  std::set<std::string> little_exc;
  for (const Path& p : enumerate(Model::Schroeder, PathKind::LittleExcursion, n)) little_exc.insert(p.text());
  if (excursion_images != little_exc || excursion_images.size() != non_little_exc) {
    return make(name, false, "excursion images do not match the little excursions");
  }
  return make(name, true, std::to_string(non_little) + " positive, " + std::to_string(non_little_exc) + " excursions");
}

CheckResult check_twice_little(std::size_t n) {
  const auto all = enumerate(Model::Schroeder, PathKind::Excursion, n).size();
  const auto little = enumerate(Model::Schroeder, PathKind::LittleExcursion, n).size();
  return make(describe("excursions twice little", n), all == 2 * little,
              std::to_string(all) + " = 2 x " + std::to_string(little));
}

CheckResult check_counts_against_enumeration(Model model, std::size_t n) {
  std::vector<PathKind> kinds = {PathKind::Positive, PathKind::Excursion, PathKind::Lukasiewicz};
  if (model == Model::Schroeder) {
    kinds.push_back(PathKind::LittlePositive);
    kinds.push_back(PathKind::LittleExcursion);
  }
  std::string detail;
  for (PathKind k : kinds) {
    const Integer dp = count_dp(model, k, n);
    const Integer closed = count(model, k, n);
    const auto listed = enumerate(model, k, n).size();
    if (dp != Integer(static_cast<unsigned long>(listed)) || closed != dp) {
      return make(describe(std::string(to_string(model)) + " counts", n), false,
                  std::string(to_string(k)) + ": dp " + dp.get_str() + ", closed form " + closed.get_str() +
                      ", enumerated " + std::to_string(listed));
    }
    detail += std::string(detail.empty() ? "" : " ") + std::string(to_string(k)) + "=" + dp.get_str();
  }
  return make(describe(std::string(to_string(model)) + " counts", n), true, detail);
}

CheckResult check_empirical_uniformity(const SamplerSpec& spec, std::size_t n, std::size_t samples,
                                       std::uint64_t seed) {
  const std::string name = describe(spec.name() + (spec.weight ? " c=" + to_string(*spec.weight) : "") +
                                        " empirical",
                                    n);
  const Law want = target_law(spec, n);
  std::map<std::string, std::size_t> index;
  std::vector<double> expected;
  for (const auto& [k, p] : want) {
    index.emplace(k, expected.size());
    expected.push_back(p.to_double());
  }
  std::vector<std::uint64_t> observed(expected.size(), 0);
  BitSource src(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto it = index.find(sample(spec, n, src).text());
    if (it == index.end()) return make(name, false, "sample outside the target class");
    ++observed[it->second];
  }
  if (observed.size() < 2) return make(name, true, "single-path class");
  const ChiSquare chi = chi_square(observed, expected);
  std::ostringstream detail;
  detail << samples << " samples over " << observed.size() << " paths, chi2=" << chi.statistic
         << " dof=" << chi.dof << " p=" << chi.p_value;
  return make(name, chi.p_value > 1e-3, detail.str());
}

CheckResult check_baseline_agreement(Family family, std::size_t n, std::size_t samples, std::uint64_t seed) {
  const SamplerSpec base{family, Kind::Positive, Method::Florentine};
  const SamplerSpec rec{family, family == Family::Schroeder ? Kind::Approximate : Kind::Positive};
  const std::string name = describe(std::string(to_string(family)) + " baseline vs recovery", n);
  const Law want = target_law(rec, n);
  std::map<std::string, std::size_t> index;
  for (const auto& [k, _] : want) index.emplace(k, index.size());
  std::vector<std::uint64_t> a(index.size(), 0);
  std::vector<std::uint64_t> b(index.size(), 0);
  BitSource sa(seed);
  BitSource sb(derive_seed(seed, 1));
  for (std::size_t i = 0; i < samples; ++i) {
    const auto ia = index.find(sample(base, n, sa).text());
    const auto ib = index.find(sample(rec, n, sb).text());
    if (ia == index.end() || ib == index.end()) return make(name, false, "sample outside the target class");
    ++a[ia->second];
    ++b[ib->second];
  }
  const ChiSquare chi = chi_square_two_sample(a, b);
  std::ostringstream detail;
  detail << samples << " samples each, chi2=" << chi.statistic << " dof=" << chi.dof << " p=" << chi.p_value;
  return make(name, chi.p_value > 1e-3, detail.str());
}

std::vector<std::string_view> suite_names() {
  return {"lemmas", "uniformity-exact", "uniformity-empirical", "counts", "bijections", "limits"};
}

namespace {

std::size_t bound(const SuiteOptions& o, std::size_t fallback) { return o.max_length.value_or(fallback); }

void lemmas_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t top = bound(o, 10);
  for (std::size_t n = 1; n <= std::min<std::size_t>(top, 10); ++n) r.checks.push_back(check_motzkin_recover_lemma(n));
  for (const Rational& c : {Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(top, 8); ++n) {
      r.checks.push_back(check_colored_recover_lemma(n, c));
    }
  }
  for (std::size_t m = 0; m <= std::min<std::size_t>(top, 10); ++m) r.checks.push_back(check_extend_lemma(m));
  for (std::size_t m = 1; m <= std::min<std::size_t>(top, 9); m += 2) {
    r.checks.push_back(check_schroeder_recover_lemma(m));
  }
  for (std::size_t m = 0; m <= std::min<std::size_t>(top, 10); ++m) r.checks.push_back(check_little_extend_lemma(m));
}

void exact_uniformity_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t top = bound(o, 6);
  for (std::size_t n = 1; n <= top; ++n) {
    r.checks.push_back(check_exact_uniformity({Family::Motzkin, Kind::Positive}, n));
    r.checks.push_back(check_exact_uniformity({Family::Motzkin, Kind::Excursion}, n));
    r.checks.push_back(check_exact_uniformity({Family::Schroeder, Kind::Positive}, n));
    r.checks.push_back(check_exact_uniformity({Family::LittleSchroeder, Kind::Positive}, n));
    if (n % 2 == 0) {
      r.checks.push_back(check_exact_uniformity({Family::Schroeder, Kind::Excursion}, n));
      r.checks.push_back(check_exact_uniformity({Family::LittleSchroeder, Kind::Excursion}, n));
    }
    r.checks.push_back(check_attempt_probability(Model::Motzkin, n));
    r.checks.push_back(check_attempt_probability(Model::Schroeder, n));
  }
  for (const Rational& c : {Rational(1, 2), Rational(2)}) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(top, 5); ++n) {
      r.checks.push_back(check_exact_uniformity({Family::ColoredMotzkin, Kind::Positive, Method::Recovery, c}, n));
      r.checks.push_back(check_exact_uniformity({Family::ColoredMotzkin, Kind::Excursion, Method::Recovery, c}, n));
    }
  }
}

void empirical_uniformity_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t n = bound(o, 8);
  const std::size_t even = n - n % 2;
  std::uint64_t k = 0;
  auto seed = [&] { return derive_seed(o.seed, k++); };
  const std::size_t samples = 100000;
  r.checks.push_back(check_empirical_uniformity({Family::Motzkin, Kind::Positive}, n, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::Motzkin, Kind::Excursion}, n, samples, seed()));
  r.checks.push_back(check_empirical_uniformity(
      {Family::ColoredMotzkin, Kind::Positive, Method::Recovery, Rational(1, 2)}, std::min<std::size_t>(n, 6),
      samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::Schroeder, Kind::Positive}, n, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::Schroeder, Kind::Positive}, n - 1, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::Schroeder, Kind::Excursion}, even, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::Schroeder, Kind::Approximate}, n, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::LittleSchroeder, Kind::Positive}, n, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::LittleSchroeder, Kind::Positive}, n - 1, samples, seed()));
  r.checks.push_back(check_empirical_uniformity({Family::LittleSchroeder, Kind::Excursion}, even, samples, seed()));
  r.checks.push_back(check_baseline_agreement(Family::Motzkin, n, samples, seed()));
  r.checks.push_back(check_baseline_agreement(Family::Schroeder, n, samples, seed()));
}

void counts_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t top = bound(o, 12);
  for (Model m : {Model::Dyck, Model::Motzkin, Model::ColoredMotzkin, Model::Schroeder}) {
    for (std::size_t n = 0; n <= std::min(top, m == Model::ColoredMotzkin ? std::size_t{9} : top); ++n) {
      r.checks.push_back(check_counts_against_enumeration(m, n));
    }
  }
  auto sequence = [&](const std::string& name, Model m, PathKind k, std::size_t step,
                      const std::vector<unsigned long>& want) {
    std::string got;
    bool ok = true;
    for (std::size_t i = 0; i < want.size(); ++i) {
      const Integer v = count_dp(m, k, i * step);
      ok = ok && v == Integer(want[i]);
      got += (i != 0 ? "," : "") + v.get_str();
    }
    r.checks.push_back(make(name, ok, got));
  };
  sequence("motzkin excursions n=0..7", Model::Motzkin, PathKind::Excursion, 1, {1, 1, 2, 4, 9, 21, 51, 127});
  sequence("schroeder excursions n=0,2,..,8", Model::Schroeder, PathKind::Excursion, 2, {1, 2, 6, 22, 90});
  sequence("little schroeder excursions n=0,2,..,8", Model::Schroeder, PathKind::LittleExcursion, 2,
           {1, 1, 3, 11, 45});
  for (std::size_t n = 2; n <= std::max<std::size_t>(top, 14) && n <= enumeration_bound; n += 2) {
    r.checks.push_back(check_twice_little(n));
  }
}

void bijections_suite(SuiteReport& r, const SuiteOptions& o) {
  const std::size_t top = bound(o, 12);
  for (std::size_t n = 1; n <= top; ++n) {
    r.checks.push_back(check_unfold_bijection(Model::Motzkin, n));
    if (n % 2 == 1) {
      r.checks.push_back(check_unfold_bijection(Model::Schroeder, n));
      r.checks.push_back(check_flat_unfold(n));
    }
    if (n <= 8) r.checks.push_back(check_unfold_bijection(Model::ColoredMotzkin, n));
  }
  for (std::size_t n = 1; n <= std::max<std::size_t>(top, 14) && n <= enumeration_bound; ++n) {
    r.checks.push_back(check_lift_bijection(n));
  }
}

void limits_suite(SuiteReport& r, const SuiteOptions& o) {
  const double motzkin_limit = motzkin_success_limit();
  double previous_gap = INFINITY;
  for (std::size_t n : {100, 1000, 10000}) {
    const double s = success_probability_exact(Model::Motzkin, n).success;
    const double gap = std::abs(s - motzkin_limit);
    std::ostringstream d;
    d.precision(8);
    d << "success " << s << ", limit sqrt(3)/2 = " << motzkin_limit;
    r.checks.push_back(make(describe("motzkin first-try success", n), s > 0.86 && s < 0.90 && gap < previous_gap, d.str()));
    previous_gap = gap;
  }
  for (std::size_t n : {100, 1000, 10000}) {
    const double s = success_probability_exact(Model::Schroeder, n).success;
    std::ostringstream d;
    d.precision(8);
    d << "success " << s << ", limit " << schroeder_success_limit();
    r.checks.push_back(make(describe("schroeder first-try success", n), s > 0.94, d.str()));
  }
  const auto s = simulate_limit_law(100000, 1e-6, o.seed);
  const Summary sum = summarize(s);
  const double var = sum.stddev * sum.stddev;
  std::ostringstream d;
  d << "E[S]=" << sum.mean << " Var[S]=" << var << " (targets 1/4, 1/12)";
  r.checks.push_back(make("limit law moments", std::abs(sum.mean - 0.25) < 0.01 && std::abs(var - 1.0 / 12) < 0.01,
                          d.str()));

  const std::size_t n = bound(o, 10000);
  const std::size_t trials = 400;
  struct Target {
    SamplerSpec spec;
    double time;
    double entropy;
  };
  const std::vector<Target> targets = {
      {{Family::Motzkin, Kind::Positive}, 1.25, 1.0},
      {{Family::Motzkin, Kind::Excursion}, 1.75, 1.0},
      {{Family::Schroeder, Kind::Positive}, 1.25, 1.0},
      {{Family::Schroeder, Kind::Excursion}, 1.75, 1.0},
      {{Family::Motzkin, Kind::Positive, Method::Florentine}, 2.0, 2.0},
  };
  std::uint64_t k = 0;
  for (const auto& t : targets) {
    const FactorReport rep = run_metered(t.spec, n, trials, derive_seed(o.seed, ++k));
    const Summary tf = rep.time_factor();
    const double ef = rep.entropy_factor();
    // Loose bands: finite n and a few hundred trials.
    const double band = t.time >= 2 ? 0.15 : 0.06;
    std::ostringstream dd;
    dd << "time factor " << tf.mean << " (target " << t.time << "), entropy factor " << ef << " (target "
       << t.entropy << "), " << trials << " trials";
    r.checks.push_back(make(describe(t.spec.name() + " factors", n),
                            std::abs(tf.mean - t.time) < band && std::abs(ef - t.entropy) < band, dd.str()));
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  SuiteReport r{std::string(name), {}};
  if (name == "lemmas") {
    lemmas_suite(r, options);
  } else if (name == "uniformity-exact") {
    exact_uniformity_suite(r, options);
  } else if (name == "uniformity-empirical") {
    empirical_uniformity_suite(r, options);
  } else if (name == "counts") {
    counts_suite(r, options);
  } else if (name == "bijections") {
    bijections_suite(r, options);
  } else if (name == "limits") {
    limits_suite(r, options);
  } else {
    throw ContractViolation("unknown suite '" + std::string(name) + "'");
  }
  return r;
}

}  // namespace latticegen
