#include "latticegen/exact_number.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <sstream>

#include "latticegen/error.hpp"

namespace latticegen {

ExactNumber::ExactNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

ExactNumber ExactNumber::fraction(long num, long den) {
  expects(den != 0, "zero denominator");
  return ExactNumber(Rational(num, den));
}

int ExactNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a² with 2b².
  const Rational diff = a_ * a_ - 2 * b_ * b_;
  return sgn(diff) * sa;
}

namespace {

double conjugate_free(const Rational& a, const Rational& b) {
  // a + b√2 with a, b of the same sign: no cancellation.
  mpf_class fa(a, 256);
  mpf_class fb(b, 256);
  mpf_class root = sqrt(mpf_class(2, 256));
  mpf_class v = fa + fb * root;
  return v.get_d();
}

}  // namespace

double ExactNumber::to_double() const {
  if (is_rational()) return a_.get_d();
  if (sgn(a_) == 0 || sgn(a_) == sgn(b_)) return conjugate_free(a_, b_);
  // a + b√2 = (a² − 2b²) / (a − b√2); the denominator has no cancellation.
  const Rational norm = a_ * a_ - 2 * b_ * b_;
  mpf_class den(0, 256);
  {
    mpf_class fa(a_, 256);
    mpf_class fb(b_, 256);
    den = fa - fb * sqrt(mpf_class(2, 256));
  }
  mpf_class num(norm, 256);
  mpf_class v = num / den;
  return v.get_d();
}

std::string ExactNumber::to_string() const {
  if (is_rational()) return latticegen::to_string(a_);
  std::ostringstream out;
  if (sgn(a_) != 0) out << latticegen::to_string(a_) << (sgn(b_) > 0 ? "+" : "");
  out << latticegen::to_string(b_) << "*sqrt2";
  return out.str();
}

Integer ExactNumber::floor_scaled(std::size_t bits) const {
  // x = (A + B√2) / d over a common positive denominator d.
  const Integer d = lcm(a_.get_den(), b_.get_den());
  Integer A = a_.get_num() * (d / a_.get_den());
  Integer B = b_.get_num() * (d / b_.get_den());
  A <<= static_cast<mp_bitcnt_t>(bits);
  B <<= static_cast<mp_bitcnt_t>(bits);
  Integer floor_b_root2;
  if (sgn(B) != 0) {
    Integer sq = 2 * B * B;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    // B√2 is irrational for B ≠ 0, so its ceiling is floor + 1.
    floor_b_root2 = sgn(B) > 0 ? root : Integer(-root - 1);
  }
  Integer m = A + floor_b_root2;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::optional<std::size_t> ExactNumber::dyadic_length() const {
  if (!is_rational()) return std::nullopt;
  const Integer& den = a_.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  return mpz_scan1(den.get_mpz_t(), 0);
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactNumber& ExactNumber::operator-=(const ExactNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactNumber& ExactNumber::operator*=(const ExactNumber& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactNumber& ExactNumber::operator/=(const ExactNumber& o) {
  expects(o.sign() != 0, "division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  const Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  *this *= ExactNumber(o.a_ / norm, -o.b_ / norm);
  return *this;
}

ExactNumber ExactNumber::pow(unsigned exponent) const {
  ExactNumber result(1);
  ExactNumber base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-')) return std::nullopt;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace latticegen
