#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jcouple/errors.hpp"
#include "jcouple/numerics/bigint.hpp"

namespace jcouple {

/// An element of Z/2, stored as twice its value (3/2 is stored as 3).
class HalfInt {
 public:
  constexpr HalfInt() = default;

  /// numerator/denominator with denominator 1 or 2.
  constexpr HalfInt(std::int64_t numerator, std::int64_t denominator = 1) {  // NOLINT
    if (denominator == 1) {
      twice_ = 2 * numerator;
    } else if (denominator == 2) {
      twice_ = numerator;
    } else {
      throw DomainError("HalfInt denominator must be 1 or 2");
    }
  }

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  /// The integer value; throws DomainError for half-odd values.
  std::int64_t as_integer() const;

  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  Rational to_rational() const { return Rational(twice_, 2); }

  /// Canonical text: "k" or "k/2" with k odd.
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Accepts "k", "k/2" and decimal forms ending in ".5" or ".0".
HalfInt parse_halfint(std::string_view text);

enum class Parity { Natural, HalfOdd };
enum class SignedClass { Natural, HalfOdd, NegativeNatural, NegativeHalfOdd };

/// Natural (N) or half-odd (H) for a nonnegative value; throws on negatives.
Parity classify(HalfInt h);
SignedClass classify_signed(HalfInt h);

/// (-1)^(2h) as +1 / -1.
constexpr int univalence_sign(HalfInt h) { return h.is_integer() ? 1 : -1; }

/// (-1)^h for integral h; throws DomainError when h is half-odd.
int minus_one_power(HalfInt h);

}  // namespace jcouple
