#include "jcouple/numerics/surd.hpp"

#include <cmath>
#include <ostream>

#include "jcouple/errors.hpp"

namespace jcouple {

namespace {

bool perfect_square(const BigInt& n, BigInt& root) {
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

Surd::Surd(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("Surd radicand must be nonnegative");
  if (sign_ < -1 || sign_ > 1) throw DomainError("Surd sign must be -1, 0 or +1");
  if (radicand_ == 0) {
    sign_ = 0;
  } else if (sign_ == 0) {
    throw DomainError("Surd with zero sign needs a zero radicand");
  }
}

Surd Surd::from_rational(const Rational& r) {
  if (r == 0) return {};
  return Surd(r > 0 ? 1 : -1, r * r);
}

double Surd::to_double() const {
  return sign_ * std::sqrt(radicand_.convert_to<double>());
}

std::string Surd::to_string() const {
  if (sign_ == 0) return "0";
  const std::string prefix = sign_ < 0 ? "-" : "";
  BigInt num_root;
  BigInt den_root;
  if (perfect_square(numerator_of(radicand_), num_root) && perfect_square(denominator_of(radicand_), den_root)) {
    return prefix + jcouple::to_string(Rational(num_root, den_root));
  }
  return prefix + "√(" + jcouple::to_string(radicand_) + ")";
}

Surd Surd::operator-() const {
  Surd out = *this;
  out.sign_ = -sign_;
  return out;
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Surd(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.is_zero()) throw DomainError("division by a zero Surd");
  if (a.is_zero()) return {};
  return Surd(a.sign_ * b.sign_, a.radicand_ / b.radicand_);
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.to_string(); }

}  // namespace jcouple
