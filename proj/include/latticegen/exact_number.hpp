#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace latticegen {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element a + b·√2 of the field Q(√2), with a and b kept as reduced
/// rationals. Plain rationals are the elements with b = 0.
class ExactNumber {
 public:
  ExactNumber() = default;
  ExactNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactNumber(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  ExactNumber(Rational a, Rational b);

  static ExactNumber sqrt2() { return {Rational(0), Rational(1)}; }
  /// r = √2 − 1, the positive root of 2r + r² = 1.
  static ExactNumber r() { return {Rational(-1), Rational(1)}; }
  static ExactNumber fraction(long num, long den);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt2_part() const noexcept { return b_; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  /// floor(2^bits · x), exactly.
  Integer floor_scaled(std::size_t bits) const;
  /// For a dyadic rational in [0,1), the number of binary digits after which
  /// the expansion terminates; empty for any other value.
  std::optional<std::size_t> dyadic_length() const;

  ExactNumber& operator+=(const ExactNumber& o);
  ExactNumber& operator-=(const ExactNumber& o);
  ExactNumber& operator*=(const ExactNumber& o);
  ExactNumber& operator/=(const ExactNumber& o);

  friend ExactNumber operator+(ExactNumber x, const ExactNumber& y) { return x += y; }
  friend ExactNumber operator-(ExactNumber x, const ExactNumber& y) { return x -= y; }
  friend ExactNumber operator*(ExactNumber x, const ExactNumber& y) { return x *= y; }
  friend ExactNumber operator/(ExactNumber x, const ExactNumber& y) { return x /= y; }
  ExactNumber operator-() const { return {-a_, -b_}; }

  friend bool operator==(const ExactNumber& x, const ExactNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactNumber& x, const ExactNumber& y) {
    return (x - y).sign() <=> 0;
  }

  ExactNumber pow(unsigned exponent) const;

 private:
  Rational a_;
  Rational b_;
};

std::string to_string(const Rational& q);
/// Parses "p/q" or an integer.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace latticegen
