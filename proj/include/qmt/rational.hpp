#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qmt {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "-p/q" or an integer. The result is canonical.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

// Decimal scientific notation with `digits` significant digits, e.g. "1.4e297".
// Exact up to the final rounding step; zero prints as "0".
std::string to_scientific(const Rational& value, int digits = 6);
std::string to_scientific(const BigInt& value, int digits = 6);

// Least integer >= value.
BigInt ceil(const Rational& value);

// Complex number with exact rational components.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  ComplexRational conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const ComplexRational& value);

}  // namespace qmt
