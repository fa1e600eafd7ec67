#include <cmath>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "latticegen/error.hpp"
#include "latticegen/oracles.hpp"

using namespace latticegen;

namespace {

std::vector<long> as_longs(const CountTable& t) {
  std::vector<long> out;
  for (const auto& v : t.values) out.push_back(v.get_si());
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("enumeration examples") {
    std::vector<std::string> got;
    for (const Path& p : enumerate(Model::Motzkin, PathKind::Positive, 2)) got.push_back(p.text());
    CHECK(got == std::vector<std::string>{"FF", "FU", "UD", "UF", "UU"});

    got.clear();
    for (const Path& p : enumerate(Model::Schroeder, PathKind::LittleExcursion, 4)) got.push_back(p.text());
    CHECK(got == std::vector<std::string>{"UDUD", "UFD", "UUDD"});

    got.clear();
    for (const Path& p : enumerate(Model::Motzkin, PathKind::Lukasiewicz, 3)) got.push_back(p.text());
    CHECK(got == std::vector<std::string>{"FFD", "UDD"});

    CHECK(enumerate(Model::Schroeder, PathKind::Positive, 0).size() == 1);
    CHECK_THROWS_AS(enumerate(Model::Motzkin, PathKind::Positive, enumeration_bound + 1), ContractViolation);
    CHECK_THROWS_AS(enumerate(Model::Motzkin, PathKind::LittlePositive, 3), ContractViolation);
  }

  TEST_CASE("frozen counts") {
    CHECK(as_longs(count_table(Model::Motzkin, PathKind::Positive, 10)) ==
          std::vector<long>{1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303});
    CHECK(as_longs(count_table(Model::Motzkin, PathKind::Excursion, 10)) ==
          std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188});
    CHECK(as_longs(count_table(Model::Schroeder, PathKind::Positive, 10)) ==
          std::vector<long>{1, 1, 3, 5, 13, 25, 63, 129, 321, 681, 1683});
    CHECK(as_longs(count_table(Model::Schroeder, PathKind::Excursion, 10)) ==
          std::vector<long>{1, 0, 2, 0, 6, 0, 22, 0, 90, 0, 394});
    CHECK(as_longs(count_table(Model::Schroeder, PathKind::LittlePositive, 10)) ==
          std::vector<long>{1, 1, 2, 4, 9, 19, 44, 96, 225, 501, 1182});
    CHECK(as_longs(count_table(Model::Schroeder, PathKind::LittleExcursion, 10)) ==
          std::vector<long>{1, 0, 1, 0, 3, 0, 11, 0, 45, 0, 197});
    CHECK(as_longs(count_table(Model::Dyck, PathKind::Positive, 6)) == std::vector<long>{1, 1, 2, 3, 6, 10, 20});
    CHECK(count_table(Model::Motzkin, PathKind::Positive, 2).json() ==
          R"({"model":"motzkin","kind":"positive","values":["1","2","5"]})");
  }

  TEST_CASE("colored counts") {
    for (unsigned long n = 0; n <= 12; ++n) {
      CHECK(count(Model::ColoredMotzkin, PathKind::Positive, n) == binomial(2 * n + 1, n));
      // Excursions of the bicolored model are Catalan(n+1).
      CHECK(count(Model::ColoredMotzkin, PathKind::Excursion, n) == binomial(2 * n + 2, n + 1) / (n + 2));
    }
    std::vector<Rational> half;
    for (std::size_t n = 0; n <= 3; ++n) half.push_back(weighted_count(PathKind::Positive, n, Rational(1, 2)));
    CHECK(half == std::vector<Rational>{1, Rational(5, 2), Rational(29, 4), Rational(177, 8)});
    std::vector<long> two;
    for (std::size_t n = 0; n <= 5; ++n) two.push_back(Rational(weighted_count(PathKind::Excursion, n, Rational(2))).get_num().get_si());
    CHECK(two == std::vector<long>{1, 3, 10, 36, 137, 543});
  }

  TEST_CASE("closed forms agree with the DP") {
    for (Model m : {Model::Motzkin, Model::Schroeder, Model::ColoredMotzkin, Model::Dyck}) {
      for (PathKind k : {PathKind::Positive, PathKind::Excursion, PathKind::Lukasiewicz}) {
        for (std::size_t n = 0; n <= 40; ++n) CHECK(count(m, k, n) == count_dp(m, k, n));
      }
    }
    for (PathKind k : {PathKind::LittlePositive, PathKind::LittleExcursion}) {
      for (std::size_t n = 0; n <= 40; ++n) CHECK(count(Model::Schroeder, k, n) == count_dp(Model::Schroeder, k, n));
    }
    for (const Rational& c : {Rational(1, 3), Rational(5, 2)}) {
      for (PathKind k : {PathKind::Positive, PathKind::Excursion}) {
        for (std::size_t n = 0; n <= 25; ++n) CHECK(weighted_count(k, n, c) == weighted_count_dp(k, n, c));
      }
    }
  }

  TEST_CASE("log2 counts") {
    const auto exact_log2 = [](const Integer& v) {
      long exp = 0;
      const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
      return std::log2(mant) + static_cast<double>(exp);
    };
    for (std::size_t n : {1, 7, 50, 300}) {
      CHECK(log2_count(Model::Motzkin, PathKind::Positive, n) ==
            doctest::Approx(exact_log2(count(Model::Motzkin, PathKind::Positive, n))).epsilon(1e-9));
      CHECK(log2_count(Model::Schroeder, PathKind::Positive, n) ==
            doctest::Approx(exact_log2(count(Model::Schroeder, PathKind::Positive, n))).epsilon(1e-9));
      CHECK(log2_count(Model::Schroeder, PathKind::LittlePositive, n) ==
            doctest::Approx(exact_log2(count(Model::Schroeder, PathKind::LittlePositive, n))).epsilon(1e-9));
      const std::size_t even = 2 * n;
      CHECK(log2_count(Model::Schroeder, PathKind::LittleExcursion, even) ==
            doctest::Approx(exact_log2(count(Model::Schroeder, PathKind::LittleExcursion, even))).epsilon(1e-9));
      const Rational c(3, 2);
      const Rational w = weighted_count(PathKind::Excursion, n, c);
      CHECK(log2_count(Model::ColoredMotzkin, PathKind::Excursion, n, c) ==
            doctest::Approx(std::log2(w.get_d())).epsilon(1e-9));
    }
    // Grows like n·log₂3 for Motzkin paths.
    const double big = log2_count(Model::Motzkin, PathKind::Positive, 1'000'000);
    CHECK(big / 1e6 == doctest::Approx(std::log2(3.0)).epsilon(1e-4));
  }

  TEST_CASE("expected colored steps") {
    const Rational c(2);
    for (std::size_t n = 1; n <= 8; ++n) {
      Rational num = 0;
      Rational den = 0;
      for (const Path& p : enumerate(Model::ColoredMotzkin, PathKind::Positive, n)) {
        num += weight(p, c) * static_cast<long>(p.colored_count());
        den += weight(p, c);
      }
      CHECK(expected_colored_steps(PathKind::Positive, n, c) == doctest::Approx(Rational(num / den).get_d()));
    }
  }

  TEST_CASE("distribution tables") {
    const DistTable d = exact_recover_dist(Path::from_text(Model::Motzkin, "D"));
    CHECK(d.total() == ExactNumber(1));
    CHECK(d.success_mass() == ExactNumber::fraction(2, 3));
    CHECK(d.conditioned().probability("U") == ExactNumber::fraction(1, 2));
    CHECK(d.probability("UU") == ExactNumber(0));
    const auto j = nlohmann::json::parse(d.json());
    CHECK(j["entries"]["U"]["exact"] == "1/3");
    CHECK(j["reject"]["value"].get<double>() == doctest::Approx(1.0 / 3));

    for (std::size_t n = 1; n <= 6; ++n) {
      for (Family f : {Family::Motzkin, Family::Schroeder, Family::LittleSchroeder}) {
        CHECK(exact_attempt_dist({f, Kind::Positive}, n).total() == ExactNumber(1));
      }
    }
  }

  TEST_CASE("success probabilities") {
    const auto s1 = success_probability_exact(Model::Schroeder, 1);
    CHECK(s1.p_n * ExactNumber(2) == ExactNumber::sqrt2());
    CHECK(s1.success == doctest::Approx(1.0));
    const auto m1 = success_probability_exact(Model::Motzkin, 1);
    CHECK(m1.p_n == ExactNumber::fraction(4, 9));
    CHECK(m1.success == doctest::Approx(8.0 / 9));

    CHECK(success_probability_exact(Model::Motzkin, 100).success == doctest::Approx(0.866563).epsilon(1e-5));
    CHECK(success_probability_exact(Model::Motzkin, 10'000).success == doctest::Approx(0.866031).epsilon(1e-5));
    CHECK(success_probability_exact(Model::Schroeder, 100).success == doctest::Approx(0.944112).epsilon(1e-5));
    CHECK(success_probability_exact(Model::Schroeder, 10'000).success == doctest::Approx(0.942335).epsilon(1e-5));
    CHECK(motzkin_success_limit() == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(schroeder_success_limit() == doctest::Approx(0.942317).epsilon(1e-5));
    CHECK_THROWS_AS(success_probability_exact(Model::Dyck, 3), ContractViolation);
  }
}
