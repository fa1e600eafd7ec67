#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "latticegen/error.hpp"
#include "latticegen/oracles.hpp"
#include "latticegen/schroeder.hpp"
#include "latticegen/transforms.hpp"
#include "latticegen/verification.hpp"

using namespace latticegen;

namespace {

Path schroeder(std::string_view s) { return Path::from_text(Model::Schroeder, s); }

const ExactNumber r = ExactNumber::r();

std::set<std::string> keys(const DistTable& d) {
  std::set<std::string> out;
  for (const auto& [k, _] : d.entries) out.insert(k);
  return out;
}

void check_uniform(const DistTable& d, const std::set<std::string>& want) {
  CHECK(keys(d) == want);
  const ExactNumber each = ExactNumber(1) / ExactNumber(static_cast<long>(want.size()));
  for (const auto& [k, p] : d.entries) CHECK_MESSAGE(p == each, k);
}

}  // namespace

TEST_SUITE("schroeder") {
  TEST_CASE("extend on single paths") {
    const DistTable e = exact_extend_dist(schroeder(""));
    CHECK(keys(e) == std::set<std::string>{"U", "D"});
    CHECK(e.probability("U") == r);
    CHECK(e.probability("D") == r);
    CHECK(e.reject_mass == r * r);

    const DistTable u = exact_extend_dist(schroeder("U"));
    CHECK(u.probability("UU") == r);
    CHECK(u.probability("UD") == r);
    CHECK(u.probability("F") == r * r);
    CHECK(u.reject_mass == ExactNumber(0));

    const DistTable f = exact_extend_dist(schroeder("F"));
    CHECK(f.probability("FU") == r);
    CHECK(f.probability("FD") == r);
    CHECK(f.probability("UF") == r.pow(3));
    CHECK(f.probability("DF") == r.pow(3));
    CHECK(f.reject_mass == r.pow(4));

    CHECK(exact_extend_dist(schroeder("FF")).reject_mass == r.pow(6));
    CHECK(exact_extend_dist(schroeder("FFF")).reject_mass == r.pow(8));
  }

  TEST_CASE("extend output length is one more") {
    for (std::size_t m = 0; m <= 7; ++m) {
      for (const Path& w : enumerate(Model::Schroeder, PathKind::Positive, m)) {
        const DistTable d = exact_extend_dist(w);
        CHECK(d.total() == ExactNumber(1));
        for (const auto& [k, _] : d.entries) CHECK(schroeder(k).geo_len() == m + 1);
      }
    }
  }

  TEST_CASE("recover on single paths") {
    const DistTable d = exact_recover_dist(schroeder("D"));
    CHECK(d.probability("U") == ExactNumber(1) / (ExactNumber(1) + r));
    CHECK(d.probability("F") == r / (ExactNumber(1) + r));
    CHECK(d.reject_mass == ExactNumber(0));

    // FD: the marked-flat slot drops F, unfolds D into U and extends; only
    // UU reaches height 2 and becomes UUF.
    const ExactNumber q3 = ExactNumber(1) / (ExactNumber(3) + r);
    const DistTable fd = exact_recover_dist(schroeder("FD"));
    CHECK(fd.probability("UUF") == q3 * r);
    CHECK(fd.reject_mass == q3 * (ExactNumber(1) - r));
    CHECK(fd.total() == ExactNumber(1));

    CHECK(check_schroeder_recover_lemma(3).passed);
    CHECK_THROWS_AS(exact_recover_dist(schroeder("UD")), ContractViolation);
  }

  TEST_CASE("approximate sampler (lengths n and n-1)") {
    const DistTable one = exact_sampler_dist({Family::Schroeder, Kind::Approximate}, 1);
    CHECK(keys(one) == std::set<std::string>{"U", ""});
    CHECK(one.probability("U") == ExactNumber(1) / (ExactNumber(1) + r));
    CHECK(one.probability("") == r / (ExactNumber(1) + r));

    CHECK(check_attempt_probability(Model::Schroeder, 2).passed);
    CHECK(check_attempt_probability(Model::Schroeder, 5).passed);

    // Per-path frequency ratio between the two lengths is r.
    BitSource src(77);
    const int trials = 100'000;
    int shorter = 0;
    for (int i = 0; i < trials; ++i) shorter += sample_schroeder_approx(4, src).geo_len() == 3 ? 1 : 0;
    const double s3 = 5;   // positive paths of length 3
    const double s4 = 13;  // positive paths of length 4
    const double p_short = r.to_double() * s3 / (s4 + r.to_double() * s3);
    const double sigma = std::sqrt(p_short * (1 - p_short) / trials);
    CHECK(std::abs(shorter / double(trials) - p_short) < 3 * sigma);
  }

  TEST_CASE("positive paths, odd and even length") {
    check_uniform(exact_sampler_dist({Family::Schroeder, Kind::Positive}, 1), {"U"});
    check_uniform(exact_sampler_dist({Family::Schroeder, Kind::Positive}, 3), {"UUU", "UUD", "UDU", "UF", "FU"});
    check_uniform(exact_sampler_dist({Family::Schroeder, Kind::Positive}, 2), {"UU", "UD", "F"});
    CHECK(check_empirical_uniformity({Family::Schroeder, Kind::Positive}, 5, 100'000, 5).passed);
    CHECK(check_empirical_uniformity({Family::Schroeder, Kind::Positive}, 6, 100'000, 6).passed);
  }

  TEST_CASE("excursions") {
    BitSource src(3);
    CHECK(sample_schroeder_excursion(0, src).empty());
    check_uniform(exact_sampler_dist({Family::Schroeder, Kind::Excursion}, 2), {"UD", "F"});
    const DistTable four = exact_sampler_dist({Family::Schroeder, Kind::Excursion}, 4);
    CHECK(four.entries.size() == 6);
    check_uniform(four, keys(four));
    CHECK_THROWS_AS(sample_schroeder_excursion(3, src), ContractViolation);
  }

  TEST_CASE("little paths") {
    check_uniform(exact_sampler_dist({Family::LittleSchroeder, Kind::Excursion}, 2), {"UD"});
    check_uniform(exact_sampler_dist({Family::LittleSchroeder, Kind::Excursion}, 4), {"UDUD", "UFD", "UUDD"});
    check_uniform(exact_sampler_dist({Family::LittleSchroeder, Kind::Positive}, 2), {"UU", "UD"});
    check_uniform(exact_sampler_dist({Family::LittleSchroeder, Kind::Positive}, 1), {"U"});
    check_uniform(exact_sampler_dist({Family::LittleSchroeder, Kind::Positive}, 3), {"UUU", "UUD", "UDU", "UF"});
    const DistTable four = exact_sampler_dist({Family::LittleSchroeder, Kind::Positive}, 4);
    CHECK(four.entries.size() == 9);
    check_uniform(four, keys(four));
    CHECK(lift(schroeder("F")).text() + "D" == "UD");
  }

  TEST_CASE("odd little paths: an extension ending DD at height -1 becomes sigma F") {
    // From the little path UD of length 2, extend appends D with probability
    // r, giving UDD at height -1, rewritten to UF.
    const DistTable d = exact_attempt_dist({Family::LittleSchroeder, Kind::Positive}, 3);
    CHECK(d.probability("UF") > ExactNumber(0));
    const DistTable cond = d.conditioned();
    CHECK(cond.probability("UF") == cond.probability("UUU"));
  }

  TEST_CASE("length and height share parity in every output") {
    BitSource src(99);
    for (std::size_t n = 1; n <= 40; ++n) {
      for (int rep = 0; rep < 5; ++rep) {
        const Path paths[] = {
            sample_schroeder_positive(n, src),
            sample_little_positive(n, src),
            sample_schroeder_approx(n, src),
        };
        for (const Path& p : paths) {
          CHECK((p.height() - static_cast<std::int64_t>(p.geo_len())) % 2 == 0);
          CHECK(is_positive(p));
        }
        CHECK(paths[0].geo_len() == n);
        CHECK(paths[1].geo_len() == n);
        CHECK(paths[1].is_little());
        CHECK(paths[1].is_little() == scan_is_little(paths[1]));
        CHECK(paths[2].geo_len() + 1 >= n);
        if (n % 2 == 0) {
          const Path e = sample_little_excursion(n, src);
          CHECK(e.geo_len() == n);
          CHECK(classify(e) == PathClass::Excursion);
          CHECK(e.is_little());
        }
      }
    }
  }

  TEST_CASE("large outputs keep their class") {
    BitSource src(5);
    const Path p = sample_schroeder_positive(20'001, src);
    CHECK(p.geo_len() == 20'001);
    CHECK(is_positive(p));
    CHECK(p.first_flat_at_zero() == scan_first_flat_at_zero(p));
    const Path e = sample_little_excursion(20'000, src);
    CHECK(e.geo_len() == 20'000);
    CHECK(classify(e) == PathClass::Excursion);
    CHECK(scan_is_little(e));
    const Path l = sample_little_positive(20'001, src);
    CHECK(scan_is_little(l));
    CHECK(is_positive(l));
  }
}
