#include "partcat/rat.hpp"

#include <cctype>
#include <string>

#include "partcat/errors.hpp"

namespace partcat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !all_digits(s)) throw ParseError("not a number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

Rat parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_part = s.substr(epos + 1);
    s = s.substr(0, epos);
    mpz_class e = parse_integer(exp_part, whole);
    if (!e.fits_slong_p() || abs(e) > 4096) throw ParseError("exponent out of range: '" + std::string(whole) + "'");
    exponent = e.get_si();
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mant(digits.empty() ? std::string("0") : digits, 10);
  if (negative) mant = -mant;
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rat r;
  if (scale >= 0) {
    r = Rat(mant, pow10(static_cast<unsigned long>(scale)));
  } else {
    r = Rat(mant * pow10(static_cast<unsigned long>(-scale)));
  }
  r.canonicalize();
  return r;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s, text);
}

std::string to_fraction_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rat& value, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale = pow10(static_cast<unsigned long>(digits));
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  // round half away from zero
  mpz_class q = (2 * num + den) / (2 * den);
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(value) < 0 && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace partcat
