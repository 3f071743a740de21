#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "nilgeo/error.hpp"

namespace nilgeo {

/// Arbitrary-precision rational number. Always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("ZERO_DENOMINATOR", "Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Exact conversion: doubles are dyadic rationals.
  static Rational from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
  }

  /// Parses "a" or "a/b" with optional sign.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
      mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw Error("ZERO_DENOMINATOR", "Rational: zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw Error("SYNTAX", "bad rational literal: '" + s + "'");
    }
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("DIV_BY_ZERO", "Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inv() const {
    if (is_zero()) throw Error("DIV_BY_ZERO", "Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

 private:
  mpq_class v_;
};

/// Best rational approximation of x with denominator <= max_denominator,
/// by the continued-fraction convergent/semiconvergent rule. Ties between
/// the two final candidates go to the smaller denominator.
inline Rational rationalize(double x, long max_denominator) {
  if (max_denominator < 1)
    throw Error("BAD_ARGUMENT", "rationalize: max_denominator must be >= 1");
  Rational target = Rational::from_double(x);
  if (target.sign() < 0) return -rationalize(-x, max_denominator);

  mpz_class bound(max_denominator);
  if (target.den() <= bound) return target;

  // Convergents p/q of the continued fraction of target.
  mpz_class p_prev(1), q_prev(0), p_cur, q_cur;
  mpz_class num = target.num(), den = target.den();
  p_cur = num / den;  // a0 (target >= 0)
  q_cur = 1;
  mpz_class rem = num - p_cur * den;
  while (rem != 0) {
    // target = [..., a]; next partial quotient of (den/rem).
    mpz_class a = den / rem;
    mpz_class new_rem = den - a * rem;
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    if (q_next > bound) {
      // Best semiconvergent respecting the bound.
      mpz_class k = (bound - q_prev) / q_cur;
      Rational conv(mpq_class(p_cur, q_cur));
      if (k == 0) return conv;
      Rational semi(mpq_class(k * p_cur + p_prev, k * q_cur + q_prev));
      Rational err_conv = (conv - target).abs();
      Rational err_semi = (semi - target).abs();
      if (err_semi < err_conv) return semi;
      return conv;  // conv has the smaller denominator, wins ties
    }
    p_prev = p_cur; q_prev = q_cur;
    p_cur = p_next; q_cur = q_next;
    num = den; den = rem; rem = new_rem;
  }
  return Rational(mpq_class(p_cur, q_cur));
}

}  // namespace nilgeo
