#include "areal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace areal {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Integer(std::string(s), 10);
  return true;
}

Integer pow10z(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num, den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return make_rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Integer ez;
    if (!parse_integer(text.substr(e + 1), ez)) return std::nullopt;
    if (!ez.fits_slong_p()) return std::nullopt;
    exponent = ez.get_si();
    mantissa = text.substr(0, e);
  }

  Integer num;
  unsigned long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view head = mantissa.substr(0, dot);
    std::string_view tail = mantissa.substr(dot + 1);
    if (tail.empty()) return std::nullopt;
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    std::string joined;
    if (head.empty() || head == "+" || head == "-")
      joined = std::string(head) + "0" + std::string(tail);
    else
      joined = std::string(head) + std::string(tail);
    if (!parse_integer(joined, num)) return std::nullopt;
    frac_digits = tail.size();
  } else {
    if (!parse_integer(mantissa, num)) return std::nullopt;
  }

  Rational q(num);
  if (frac_digits > 0) q /= Rational(pow10z(frac_digits));
  if (exponent > 0) q *= Rational(pow10z(static_cast<unsigned long>(exponent)));
  if (exponent < 0) q /= Rational(pow10z(static_cast<unsigned long>(-exponent)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace areal
