// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "latticegen/metrics.hpp"
#include "latticegen/oracles.hpp"
#include "latticegen/randomness.hpp"
#include "latticegen/verification.hpp"

using namespace latticegen;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

// Folds a suite into an outcome, naming the first few failing checks.
void absorb(Outcome& out, const SuiteReport& report) {
  std::size_t failures = 0;
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    if (++failures <= 3) out.require(false, c.name + ": " + c.detail);
  }
  out.detail << report.suite << " " << report.checks.size() - failures << "/" << report.checks.size() << " checks; ";
}

bool within(double x, double center, double tol) { return std::abs(x - center) <= tol; }

Outcome exact_uniformity() {
  Outcome out;
  absorb(out, run_suite("uniformity-exact"));
  return out;
}

Outcome lemmas() {
  Outcome out;
  absorb(out, run_suite("lemmas"));
  return out;
}

Outcome bijections() {
  Outcome out;
  absorb(out, run_suite("bijections"));
  std::size_t ok = 0;
  for (std::size_t n = 2; n <= 14; ++n) {
    const CheckResult c = check_twice_little(n);
    out.require(c.passed, c.name + ": " + c.detail);
    ok += c.passed ? 1 : 0;
  }
  out.detail << "twice-little " << ok << "/13 lengths";
  return out;
}

Outcome counting() {
  Outcome out;
  absorb(out, run_suite("counts"));
  return out;
}

Outcome first_try() {
  Outcome out;
  out.detail.precision(6);
  for (std::size_t n : {100, 1000, 10000}) {
    const double m = success_probability_exact(Model::Motzkin, n).success;
    const double s = success_probability_exact(Model::Schroeder, n).success;
    out.require(m > 0.86 && m < 0.90, "motzkin success at " + std::to_string(n));
    out.require(s > 0.94, "schroeder success at " + std::to_string(n));
    out.detail << "n=" << n << " motzkin " << m << " schroeder " << s << "; ";
  }
  const double m2 = success_probability_exact(Model::Motzkin, 100).success;
  const double m4 = success_probability_exact(Model::Motzkin, 10000).success;
  out.require(std::abs(m4 - motzkin_success_limit()) < std::abs(m2 - motzkin_success_limit()),
              "motzkin success approaches sqrt(3)/2");

  const std::size_t runs = 10'000;
  const struct {
    SamplerSpec spec;
    Model model;
  } cases[] = {{{Family::Motzkin, Kind::Positive}, Model::Motzkin},
               {{Family::Schroeder, Kind::Approximate}, Model::Schroeder}};
  std::uint64_t seed = 500;
  for (const auto& c : cases) {
    const double p = success_probability_exact(c.model, 1000).success;
    const double rate = run_metered(c.spec, 1000, runs, seed++).first_try_rate();
    const double sigma = std::sqrt(p * (1 - p) / runs);
    out.require(std::abs(rate - p) <= 3 * sigma, c.spec.name() + " empirical first-try rate");
    out.detail << c.spec.name() << " empirical " << rate << " vs " << p << " (3 sigma " << 3 * sigma << "); ";
  }
  return out;
}

Outcome factors() {
  Outcome out;
  out.detail.precision(5);
  const struct {
    SamplerSpec spec;
    std::size_t n;
    double time;
    double time_tol;
    double entropy_lo;
    double entropy_hi;
  } cases[] = {
      {{Family::Motzkin, Kind::Positive}, 100'000, 1.25, 0.02, 1.0, 1.01},
      {{Family::Schroeder, Kind::Positive}, 100'000, 1.25, 0.02, 1.0, 1.01},
      {{Family::Motzkin, Kind::Excursion}, 100'000, 1.75, 0.02, 1.0, 1.01},
      {{Family::Schroeder, Kind::Excursion}, 100'000, 1.75, 0.02, 1.0, 1.01},
      {{Family::Motzkin, Kind::Positive, Method::Florentine}, 10'000, 2.0, 0.1, 1.9, 2.1},
      {{Family::Schroeder, Kind::Positive, Method::Florentine}, 10'000, 2.0, 0.1, 1.9, 2.1},
  };
  std::uint64_t seed = 600;
  for (const auto& c : cases) {
    const FactorReport rep = run_metered(c.spec, c.n, 2000, seed++);
    const double tf = rep.time_factor().mean;
    const double ef = rep.entropy_factor();
    out.require(within(tf, c.time, c.time_tol), c.spec.name() + " time factor");
    out.require(ef >= c.entropy_lo && ef <= c.entropy_hi, c.spec.name() + " entropy factor");
    out.detail << c.spec.name() << " n=" << c.n << " time " << tf << " entropy " << ef << "; ";
  }
  return out;
}

Outcome limit_law() {
  Outcome out;
  out.detail.precision(5);
  const FactorReport rep = run_metered({Family::Motzkin, Kind::Positive}, 100'000, 5000, 700);
  std::vector<double> excess;
  for (const auto& t : rep.trials) excess.push_back(t.time_factor - 1);
  const std::vector<double> s = simulate_limit_law(5000, 1e-6, 701);
  const double ks = ks_distance(excess, s);
  const Summary sum = summarize(s);
  const double var = sum.stddev * sum.stddev;
  out.require(ks < 0.05, "KS distance");
  out.require(within(sum.mean, 0.25, 0.01), "E[S]");
  out.require(within(var, 1.0 / 12, 0.01), "Var[S]");
  out.detail << "KS " << ks << ", E[S] " << sum.mean << ", Var[S] " << var;
  return out;
}

Outcome primitives() {
  Outcome out;
  out.detail.precision(5);
  const std::uint64_t draws = 300'000;
  const double r = std::numbers::sqrt2 - 1;

  BitSource b(800);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < draws; ++i) hits += b.bernoulli(ExactNumber::r()) ? 1 : 0;
  const double freq = static_cast<double>(hits) / draws;
  const double sigma = std::sqrt(r * (1 - r) / draws);
  out.require(std::abs(freq - r) <= 3 * sigma, "bernoulli(r) frequency");
  out.detail << "bernoulli(r) freq " << freq << " (3 sigma " << 3 * sigma << "); ";

  const auto check_bits = [&](const std::string& name, const std::function<void(BitSource&)>& draw) {
    BitSource src(801);
    for (std::uint64_t i = 0; i < draws; ++i) draw(src);
    const double phys = static_cast<double>(src.meter().physical_bits) / draws;
    const double h = src.meter().model_entropy_bits / draws;
    out.require(phys <= h + 2, name + " bits per call");
    out.detail << name << " " << phys << " bits vs entropy " << h << "; ";
  };
  check_bits("bernoulli(r)", [](BitSource& s) { s.bernoulli(ExactNumber::r()); });
  check_bits("bernoulli(1/3)", [](BitSource& s) { s.bernoulli(ExactNumber::fraction(1, 3)); });
  check_bits("uniform_int(3)", [](BitSource& s) { s.uniform_int(3); });
  check_bits("uniform_int(1001)", [](BitSource& s) { s.uniform_int(1001); });
  check_bits("motzkin step", [](BitSource& s) { s.draw_step(StepLaw::motzkin()); });
  check_bits("schroeder step", [](BitSource& s) { s.draw_step(StepLaw::schroeder()); });
  check_bits("colored step c=2", [](BitSource& s) { s.draw_step(StepLaw::colored(Rational(2))); });
  return out;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    Outcome (*run)();
  } criteria[] = {
      {"1 exact uniformity", exact_uniformity},
      {"2 lemma equalities", lemmas},
      {"3 structural bijections", bijections},
      {"4 counting", counting},
      {"5 first-try success", first_try},
      {"6 complexity factors", factors},
      {"7 limit law", limit_law},
      {"8 randomness primitives", primitives},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s [%.1f s]\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
