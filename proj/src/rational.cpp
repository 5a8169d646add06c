#include "stldist/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace stldist {

Rat rat_from_string(std::string_view text) {
  size_t i = 0;
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("malformed rational literal: '" +
                                std::string(text) + "'");
  };
  if (text.empty()) return fail();

  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return fail();

  std::string digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    digits.push_back(text[i++]);

  if (i < text.size() && text[i] == '/') {
    // fraction form p/q
    ++i;
    std::string den;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      den.push_back(text[i++]);
    if (digits.empty() || den.empty() || i != text.size()) return fail();
    mpz_class p(digits), q(den);
    if (q == 0) return fail();
    Rat r(p, q);
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  std::string frac;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      frac.push_back(text[i++]);
  }
  if (i != text.size() || (digits.empty() && frac.empty())) return fail();

  mpz_class numer(digits.empty() ? "0" : digits);
  mpz_class scale = 1;
  for (char c : frac) {
    numer = numer * 10 + (c - '0');
    scale *= 10;
  }
  Rat r(numer, scale);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

bool rat_has_finite_decimal(const Rat& q) {
  mpz_class d = q.get_den();
  for (int p : {2, 5}) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p;
  }
  return d == 1;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  if (!rat_has_finite_decimal(q)) return q.get_str();

  mpz_class num = q.get_num();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class den = q.get_den();

  // scale denominator to a power of ten
  int twos = 0, fives = 0;
  mpz_class d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  int digits = std::max(twos, fives);
  for (int k = twos; k < digits; ++k) num *= 2;
  for (int k = fives; k < digits; ++k) num *= 5;

  std::string s = num.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

std::string rat_to_decimal_approx(const Rat& q, int digits) {
  mpz_class num = q.get_num();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = num * scale / q.get_den();
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace stldist
