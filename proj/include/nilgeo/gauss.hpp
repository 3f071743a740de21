#pragma once

#include <complex>
#include <string>

#include "nilgeo/rational.hpp"

namespace nilgeo {

/// Gaussian rational: re + im*i with exact rational parts.
struct GaussRational {
  Rational re, im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussRational(long n) : re(n) {}                 // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussRational conj() const { return {re, -im}; }
  /// |x|^2 = re^2 + im^2, a nonnegative rational, zero iff x = 0.
  Rational norm2() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re; im += o.im; return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re; im -= o.im; return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRational inv() const {
    Rational n = norm2();
    if (n.is_zero()) throw Error("DIV_BY_ZERO", "GaussRational: inverse of zero");
    return {re / n, -im / n};
  }
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inv(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  /// Literal syntax: `a/b`, `a/b*i`, `a/b+c/d*i`, signs optional, `i` == `1*i`.
  std::string str() const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.str();
    std::string imag = im.abs().str() + "*i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
    return re.str() + (im.sign() < 0 ? "-" : "+") + imag;
  }

  static GaussRational parse(const std::string& text);
};

namespace detail {

// Splits off one signed rational-or-imaginary chunk from position pos.
// A chunk is [+-]? (digits(/digits)? (*i)? | i).
inline GaussRational parse_gauss_chunk(const std::string& s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  if (pos < s.size() && s[pos] == 'i' ) {
    ++pos;
    GaussRational v = GaussRational::i();
    return neg ? -v : v;
  }
  size_t digits_start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  if (pos == digits_start)
    throw Error("SYNTAX", "bad Gaussian-rational literal: '" + s.substr(start) + "'");
  Rational r = Rational::parse(s.substr(digits_start, pos - digits_start));
  bool imaginary = false;
  if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
    imaginary = true;
    pos += 2;
  } else if (pos < s.size() && s[pos] == 'i') {
    imaginary = true;
    ++pos;
  }
  if (neg) r = -r;
  return imaginary ? GaussRational(Rational(0), r) : GaussRational(r);
}

}  // namespace detail

inline GaussRational GaussRational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("SYNTAX", "empty Gaussian-rational literal");
  size_t pos = 0;
  GaussRational v = detail::parse_gauss_chunk(s, pos);
  if (pos < s.size()) {
    if (s[pos] != '+' && s[pos] != '-')
      throw Error("SYNTAX", "bad Gaussian-rational literal: '" + text + "'");
    v += detail::parse_gauss_chunk(s, pos);
  }
  if (pos != s.size())
    throw Error("SYNTAX", "trailing characters in literal: '" + text + "'");
  return v;
}

}  // namespace nilgeo
