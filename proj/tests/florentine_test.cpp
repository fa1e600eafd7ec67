#include <set>

#include "doctest.h"
#include "latticegen/error.hpp"
#include "latticegen/florentine.hpp"
#include "latticegen/metrics.hpp"
#include "latticegen/oracles.hpp"
#include "latticegen/verification.hpp"

using namespace latticegen;

namespace {

const SamplerSpec dyck{Family::Dyck, Kind::Positive, Method::Florentine};
const SamplerSpec motzkin{Family::Motzkin, Kind::Positive, Method::Florentine};
const SamplerSpec schroeder{Family::Schroeder, Kind::Positive, Method::Florentine};

}  // namespace

TEST_SUITE("florentine") {
  TEST_CASE("exact output laws") {
    const DistTable d = exact_sampler_dist(dyck, 2);
    CHECK(d.entries.size() == 2);
    CHECK(d.probability("UU") == ExactNumber::fraction(1, 2));
    CHECK(d.probability("UD") == ExactNumber::fraction(1, 2));

    // Anticipated rejection on a uniform step law hits every path of the
    // length with the same probability 3^{-n}.
    const DistTable m = exact_attempt_dist(motzkin, 4);
    CHECK(m.entries.size() == 35);
    for (const auto& [_, p] : m.entries) CHECK(p == ExactNumber::fraction(1, 81));

    CHECK(check_exact_uniformity(motzkin, 5).passed);
    CHECK(check_exact_uniformity({Family::ColoredMotzkin, Kind::Positive, Method::Florentine, Rational(2)}, 4).passed);
  }

  TEST_CASE("Schröder lengths are n or n-1 in the ratio r") {
    const DistTable d = exact_sampler_dist(schroeder, 3);
    const ExactNumber r = ExactNumber::r();
    for (const Path& p : enumerate(Model::Schroeder, PathKind::Positive, 3)) {
      for (const Path& q : enumerate(Model::Schroeder, PathKind::Positive, 2)) {
        CHECK(d.probability(q.text()) == d.probability(p.text()) * r);
      }
    }
    CHECK(d.total() == ExactNumber(1));
  }

  TEST_CASE("agrees with the recovery samplers") {
    CHECK(check_baseline_agreement(Family::Motzkin, 7, 50'000, 8).passed);
    CHECK(check_baseline_agreement(Family::Schroeder, 6, 50'000, 9).passed);
    CHECK(check_empirical_uniformity(motzkin, 8, 50'000, 10).passed);
  }

  TEST_CASE("time factor is about 2") {
    const FactorReport rep = run_metered(motzkin, 10'000, 200, 3);
    CHECK(rep.time_factor().mean == doctest::Approx(2.0).epsilon(0.15));
    CHECK(rep.first_try_rate() < 0.1);
  }

  TEST_CASE("contract errors") {
    BitSource src(1);
    CHECK_THROWS_AS(florentine_positive(Model::Motzkin, 0, src), ContractViolation);
    CHECK_THROWS_AS(validate({Family::LittleSchroeder, Kind::Positive, Method::Florentine}, 4), ContractViolation);
    CHECK_THROWS_AS(validate({Family::Motzkin, Kind::Excursion, Method::Florentine}, 4), ContractViolation);
    CHECK_THROWS_AS(validate({Family::Dyck, Kind::Positive, Method::Recovery}, 4), ContractViolation);
  }
}
