#include "qmt/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>

#include "qmt/error.hpp"

namespace qmt {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InvalidArgument("malformed rational '" + std::string(text) + "' (expected p/q or integer)");
  }
  Rational r{BigInt(num), BigInt(den)};
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  // mpq_class(num, den) does not reduce, so work on a canonical copy.
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

std::string to_string(const ComplexRational& value) {
  if (sgn(value.im) == 0) return to_string(value.re);
  return to_string(value.re) + (sgn(value.im) < 0 ? " - " : " + ") + to_string(abs(value.im)) + "i";
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::string to_scientific(const Rational& value, int digits) {
  if (sgn(value) == 0) return "0";
  if (digits < 1) digits = 1;
  const bool negative = sgn(value) < 0;
  Rational a = abs(value);
  // Find exponent e with 10^e <= a < 10^(e+1), then scale to an integer with `digits` digits.
  long e = static_cast<long>(a.get_num().get_str().size()) - static_cast<long>(a.get_den().get_str().size());
  auto pow10 = [](long k) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return p;
  };
  auto scaled = [&](long exponent) {
    return exponent >= 0 ? Rational(a / Rational(pow10(exponent))) : Rational(a * Rational(pow10(exponent)));
  };
  while (scaled(e) >= 10) ++e;
  while (scaled(e) < 1) --e;
  // mantissa * 10^(digits-1), rounded half up
  Rational m = scaled(e) * Rational(pow10(digits - 1));
  BigInt r;
  {
    Rational shifted = m + Rational(1, 2);
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  }
  std::string ds = r.get_str();
  if (static_cast<int>(ds.size()) > digits) {  // rounding carried into a new digit
    ++e;
    ds.pop_back();
  }
  std::string out = negative ? "-" : "";
  out += ds[0];
  if (ds.size() > 1) out += "." + ds.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

std::string to_scientific(const BigInt& value, int digits) { return to_scientific(Rational(value), digits); }

}  // namespace qmt
