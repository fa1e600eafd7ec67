#include <cmath>
#include <deque>
#include <map>

#include "doctest.h"
#include "latticegen/error.hpp"
#include "latticegen/motzkin.hpp"
#include "latticegen/oracles.hpp"

using namespace latticegen;

namespace {

Path motzkin(std::string_view s) { return Path::from_text(Model::Motzkin, s); }
Path colored(std::string_view s) { return Path::from_text(Model::ColoredMotzkin, s); }

// Replays fixed answers to uniform_int; any other primitive is an error.
class Scripted final : public ChoiceSource {
 public:
  explicit Scripted(std::deque<std::uint64_t> ints) : ints_(std::move(ints)) {}
  Step draw_step(const StepLaw&) override { throw ContractViolation("unexpected step draw"); }
  std::uint64_t uniform_int(std::uint64_t m) override {
    const auto v = ints_.front();
    ints_.pop_front();
    REQUIRE(v < m);
    return v;
  }
  bool bernoulli(const ExactNumber&) override { throw ContractViolation("unexpected bernoulli"); }
  std::optional<std::size_t> categorical(std::span<const ExactNumber>) override {
    throw ContractViolation("unexpected categorical");
  }

 private:
  std::deque<std::uint64_t> ints_;
};

ExactNumber frac(long a, long b) { return ExactNumber::fraction(a, b); }

}  // namespace

TEST_SUITE("motzkin") {
  TEST_CASE("slot probabilities") {
    CHECK(MotzkinParams{3, std::nullopt}.q(3) == frac(1, 7));
    CHECK(MotzkinParams{2, Rational(2)}.q(2) == frac(1, 6));
    CHECK(MotzkinParams{3, Rational(1, 2)}.q(3) == frac(1, 7));
  }

  TEST_CASE("recover on single paths") {
    const DistTable d = exact_recover_dist(motzkin("D"));
    CHECK(d.entries.size() == 2);
    CHECK(d.probability("U") == frac(1, 3));
    CHECK(d.probability("F") == frac(1, 3));
    CHECK(d.reject_mass == frac(1, 3));

    const DistTable e = exact_recover_dist(motzkin("FD"));
    CHECK(e.entries.size() == 5);
    for (const char* p : {"UF", "FU", "UU", "FF", "UD"}) CHECK(e.probability(p) == frac(1, 5));
    CHECK(e.reject_mass == ExactNumber(0));

    // Slot j = 2n flips the last non-D step: UDD becomes FDD, which is negative.
    Path w = motzkin("UDD");
    Scripted last_slot({6});
    CHECK_FALSE(recover_motzkin(w, last_slot));
    CHECK(w.text() == "FDD");
    CHECK(exact_recover_dist(motzkin("UDD")).reject_mass == frac(1, 7));
  }

  TEST_CASE("colored recover on single paths") {
    const DistTable one = exact_recover_dist(colored("FD"), Rational(1));
    CHECK(one.entries.size() == 5);
    for (const auto& [_, p] : one.entries) CHECK(p == frac(1, 5));

    const DistTable two = exact_recover_dist(colored("CD"), Rational(2));
    CHECK(two.probability("CC") == frac(2, 6));
    CHECK(two.total() == ExactNumber(1));

    const DistTable half = exact_recover_dist(colored("UDD"), Rational(1, 2));
    CHECK(half.probability("UDC") == frac(1, 14));
    CHECK(half.reject_mass == frac(1, 14));
    CHECK_THROWS_AS(exact_recover_dist(colored("UD")), ContractViolation);
  }

  TEST_CASE("positive sampler output law") {
    const DistTable one = exact_sampler_dist({Family::Motzkin, Kind::Positive}, 1);
    CHECK(one.entries.size() == 2);
    CHECK(one.probability("U") == frac(1, 2));
    CHECK(one.probability("F") == frac(1, 2));

    // Bicolored positive paths of length 2: C(5,2) = 10, all equally likely.
    const DistTable bi = exact_sampler_dist({Family::ColoredMotzkin, Kind::Positive, Method::Recovery, Rational(1)}, 2);
    CHECK(bi.entries.size() == 10);
    for (const auto& [_, p] : bi.entries) CHECK(p == frac(1, 10));

    BitSource src(2024);
    std::map<std::string, int> seen;
    const int trials = 100'000;
    for (int i = 0; i < trials; ++i) ++seen[sample_motzkin_positive({2, std::nullopt}, src).text()];
    CHECK(seen.size() == 5);
    const double sigma = std::sqrt(0.2 * 0.8 / trials);
    for (const auto& [_, k] : seen) CHECK(std::abs(k / double(trials) - 0.2) < 3 * sigma);
  }

  TEST_CASE("excursion sampler output law") {
    BitSource src(1);
    for (int i = 0; i < 20; ++i) CHECK(sample_motzkin_excursion({0, std::nullopt}, src).empty());

    const DistTable two = exact_sampler_dist({Family::Motzkin, Kind::Excursion}, 2);
    CHECK(two.entries.size() == 2);
    CHECK(two.probability("UD") == frac(1, 2));
    CHECK(two.probability("FF") == frac(1, 2));

    const DistTable four = exact_sampler_dist({Family::Motzkin, Kind::Excursion}, 4);
    CHECK(four.entries.size() == 9);
    for (const auto& [_, p] : four.entries) CHECK(p == frac(1, 9));
  }

  TEST_CASE("colored output is weight-proportional") {
    const Rational c(3);
    const DistTable d =
        exact_sampler_dist({Family::ColoredMotzkin, Kind::Excursion, Method::Recovery, c}, 3);
    const Rational total = weighted_count(PathKind::Excursion, 3, c);
    for (const Path& p : enumerate(Model::ColoredMotzkin, PathKind::Excursion, 3)) {
      CHECK(d.probability(p.text()) == ExactNumber(Rational(weight(p, c) / total)));
    }
  }

  TEST_CASE("outputs are positive, sized and reproducible") {
    for (std::size_t n : {1, 2, 17, 100, 1001}) {
      BitSource a(n);
      BitSource b(n);
      RunStats stats;
      const Path p = sample_motzkin_positive({n, std::nullopt}, a, &stats);
      CHECK(p.size() == n);
      CHECK(is_positive(p));
      CHECK(p == sample_motzkin_positive({n, std::nullopt}, b));
      CHECK(p.meter().total() >= n);

      const Path e = sample_motzkin_excursion({n, Rational(2, 3)}, a);
      CHECK(e.size() == n);
      CHECK(classify(e) == PathClass::Excursion);
    }
  }

  TEST_CASE("contract errors") {
    BitSource src(0);
    CHECK_THROWS_AS(sample_motzkin_positive({0, std::nullopt}, src), ContractViolation);
    CHECK_THROWS_AS(sample_motzkin_positive({3, Rational(0)}, src), ContractViolation);
    CHECK_THROWS_AS(sample_motzkin_positive({3, Rational(-1, 2)}, src), ContractViolation);
    CHECK_THROWS_AS(validate({Family::Motzkin, Kind::Positive, Method::Recovery, Rational(1)}, 3),
                    ContractViolation);
    CHECK_THROWS_AS(validate({Family::ColoredMotzkin, Kind::Positive}, 3), ContractViolation);
  }
}
