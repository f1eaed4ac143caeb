#include "jcouple/numerics/bigint.hpp"

#include <cctype>

#include "jcouple/errors.hpp"

namespace jcouple {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = numerator_of(value);
  const BigInt den = denominator_of(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }
BigInt denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

namespace {

BigInt parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(pos)));
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

SquareFreeSplit square_free_split(const BigInt& n) {
  if (n <= 0) throw DomainError("square_free_split needs a positive integer");
  SquareFreeSplit out{1, 1};
  BigInt rest = n;
  auto strip = [&](unsigned long p) {
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) out.root *= p;
    if (exponent % 2 == 1) out.core *= p;
  };
  strip(2);
  for (unsigned long p = 3; BigInt(p) * p <= rest; p += 2) strip(p);
  if (rest > 1) out.core *= rest;
  return out;
}

}  // namespace jcouple
