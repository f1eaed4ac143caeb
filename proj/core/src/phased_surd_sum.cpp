#include "jcouple/numerics/phased_surd_sum.hpp"

#include <cmath>
#include <ostream>

#include <boost/multiprecision/integer.hpp>

#include "jcouple/errors.hpp"

namespace jcouple {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational GaussianRational::times_i_power(std::int64_t k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

namespace {

std::string imaginary_text(const Rational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return to_string(im) + "i";
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im == 0) return jcouple::to_string(re);
  if (re == 0) return imaginary_text(im);
  const std::string sign = im < 0 ? " - " : " + ";
  return "(" + jcouple::to_string(re) + sign + imaginary_text(im < 0 ? Rational(-im) : im) + ")";
}

PhasedSurdSum PhasedSurdSum::from_surd(const Surd& s) {
  PhasedSurdSum out;
  if (s.is_zero()) return out;
  const SquareFreeSplit num = square_free_split(numerator_of(s.radicand()));
  const SquareFreeSplit den = square_free_split(denominator_of(s.radicand()));
  // sqrt(a^2 s / (b^2 t)) = a / (b t) * sqrt(s t); s, t coprime squarefree.
  const Rational coeff(num.root, den.root * den.core);
  out.add_term(num.core * den.core, {s.sign() < 0 ? Rational(-coeff) : coeff, 0});
  return out;
}

PhasedSurdSum PhasedSurdSum::from_gaussian(const GaussianRational& c) {
  PhasedSurdSum out;
  out.add_term(1, c);
  return out;
}

PhasedSurdSum PhasedSurdSum::term(const BigInt& radical, const GaussianRational& coeff) {
  if (radical <= 0 || square_free_split(radical).root != 1) {
    throw DomainError("PhasedSurdSum radical must be a positive squarefree integer");
  }
  PhasedSurdSum out;
  out.add_term(radical, coeff);
  return out;
}

void PhasedSurdSum::add_term(const BigInt& radical, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radical, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

PhasedSurdSum& PhasedSurdSum::operator+=(const PhasedSurdSum& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

PhasedSurdSum& PhasedSurdSum::operator-=(const PhasedSurdSum& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

PhasedSurdSum operator*(const PhasedSurdSum& a, const PhasedSurdSum& b) {
  PhasedSurdSum out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      const BigInt g = boost::multiprecision::gcd(ra, rb);
      const BigInt radical = (ra / g) * (rb / g);
      out.add_term(radical, ca * cb * GaussianRational{Rational(g), 0});
    }
  }
  return out;
}

PhasedSurdSum PhasedSurdSum::operator-() const {
  PhasedSurdSum out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, -c);
  return out;
}

PhasedSurdSum PhasedSurdSum::times_i_power(std::int64_t k) const {
  PhasedSurdSum out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, c.times_i_power(k));
  return out;
}

PhasedSurdSum PhasedSurdSum::scaled(const Rational& factor) const {
  PhasedSurdSum out;
  if (factor == 0) return out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, GaussianRational{c.re * factor, c.im * factor});
  return out;
}

PhasedSurdSum PhasedSurdSum::conj() const {
  PhasedSurdSum out;
  for (const auto& [r, c] : terms_) out.terms_.emplace(r, c.conj());
  return out;
}

double PhasedSurdSum::approx_real() const {
  double sum = 0.0;
  for (const auto& [r, c] : terms_) sum += c.re.convert_to<double>() * std::sqrt(r.convert_to<double>());
  return sum;
}

double PhasedSurdSum::approx_imag() const {
  double sum = 0.0;
  for (const auto& [r, c] : terms_) sum += c.im.convert_to<double>() * std::sqrt(r.convert_to<double>());
  return sum;
}

std::string PhasedSurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (r == 1) {
      out += c.to_string();
      continue;
    }
    const std::string coeff = c.to_string();
    if (coeff == "1") {
      out += "√" + jcouple::to_string(r);
    } else if (coeff == "-1") {
      out += "-√" + jcouple::to_string(r);
    } else {
      out += coeff + "√" + jcouple::to_string(r);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PhasedSurdSum& s) { return os << s.to_string(); }

}  // namespace jcouple
