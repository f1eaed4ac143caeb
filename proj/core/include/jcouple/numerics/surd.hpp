#pragma once

#include <iosfwd>
#include <string>

#include "jcouple/numerics/bigint.hpp"

namespace jcouple {

/// An exact real number sign * sqrt(radicand) with a nonnegative rational
/// radicand. Every single Clebsch-Gordan coefficient has this form.
class Surd {
 public:
  Surd() = default;

  /// sign * sqrt(radicand). A zero radicand forces sign 0; a zero sign with a
  /// nonzero radicand is rejected.
  Surd(int sign, Rational radicand);

  /// The rational r written as sign(r) * sqrt(r^2).
  static Surd from_rational(const Rational& r);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// value^2; always nonnegative.
  const Rational& square() const { return radicand_; }
  /// sign * value^2, the usual "signed square" notation of CG tables.
  Rational signed_square() const { return sign_ < 0 ? Rational(-radicand_) : radicand_; }

  double to_double() const;
  /// "0", "1", "-1/2", "√(1/2)", "-√(2/3)".
  std::string to_string() const;

  Surd operator-() const;
  friend Surd operator*(const Surd& a, const Surd& b);
  /// Throws DomainError on a zero divisor.
  friend Surd operator/(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) = default;

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

inline Surd surd_mul(const Surd& a, const Surd& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const Surd& s);

}  // namespace jcouple
