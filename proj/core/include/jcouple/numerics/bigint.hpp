#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace jcouple {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Decimal text of an integer ("-12").
std::string to_string(const BigInt& value);

/// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with optional leading sign. Throws DomainError.
Rational parse_rational(std::string_view text);

BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);

/// Splits n > 0 as root^2 * core with core squarefree.
struct SquareFreeSplit {
  BigInt root;
  BigInt core;
};
SquareFreeSplit square_free_split(const BigInt& n);

}  // namespace jcouple
