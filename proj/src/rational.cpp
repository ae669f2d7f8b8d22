#include "segstab/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace segstab {

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

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(whole) || !is_integer_literal(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(parse_integer(whole) * scale + parse_integer(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value.get_d());
  return buf;
}

mpz_class floor_of(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

mpz_class ceil_of(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  return Rational(mpz_class(1), p);
}

}  // namespace segstab
