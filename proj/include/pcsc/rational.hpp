#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "pcsc/errors.hpp"

namespace pcsc {

using Rational = mpq_class;

// num/den in lowest terms.
inline Rational ratio(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p/q" or an integer, optionally signed. Decimals are rejected so that
// no value is silently rounded.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return ParseError(ParseErrorKind::BadRational, 0,
                      "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw fail();
  std::string num(text.substr(0, i));
  if (num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') throw fail();
    const std::size_t den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw fail();
    den = std::string(text.substr(den_begin));
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw fail();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace pcsc
