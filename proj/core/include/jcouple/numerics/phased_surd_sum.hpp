#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "jcouple/numerics/bigint.hpp"
#include "jcouple/numerics/surd.hpp"

namespace jcouple {

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational conj() const { return {re, -im}; }
  /// Multiplies by i^k.
  GaussianRational times_i_power(std::int64_t k) const;
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string to_string() const;
};

/// Exact finite sum  sum_r c_r sqrt(r)  over squarefree r >= 1 with Gaussian
/// rational coefficients. Zero coefficients are never stored, so the empty
/// map is exactly zero and equality is structural.
class PhasedSurdSum {
 public:
  using Terms = std::map<BigInt, GaussianRational>;

  PhasedSurdSum() = default;
  static PhasedSurdSum from_surd(const Surd& s);
  static PhasedSurdSum from_gaussian(const GaussianRational& c);
  static PhasedSurdSum from_rational(const Rational& r) { return from_gaussian({r, 0}); }
  /// Adds coeff * sqrt(radical); radical must be squarefree and positive.
  static PhasedSurdSum term(const BigInt& radical, const GaussianRational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PhasedSurdSum& operator+=(const PhasedSurdSum& o);
  PhasedSurdSum& operator-=(const PhasedSurdSum& o);
  friend PhasedSurdSum operator+(PhasedSurdSum a, const PhasedSurdSum& b) { return a += b; }
  friend PhasedSurdSum operator-(PhasedSurdSum a, const PhasedSurdSum& b) { return a -= b; }
  friend PhasedSurdSum operator*(const PhasedSurdSum& a, const PhasedSurdSum& b);
  PhasedSurdSum operator-() const;

  PhasedSurdSum times_i_power(std::int64_t k) const;
  PhasedSurdSum scaled(const Rational& factor) const;
  PhasedSurdSum conj() const;

  double approx_real() const;
  double approx_imag() const;

  /// "0", "i", "1/2√2", "(1/3 - 2/3i)√6 + 1".
  std::string to_string() const;

  friend bool operator==(const PhasedSurdSum&, const PhasedSurdSum&) = default;

 private:
  void add_term(const BigInt& radical, const GaussianRational& coeff);

  Terms terms_;
};

/// Rewrites sign*sqrt(p/q) as c*sqrt(r) with r squarefree.
inline PhasedSurdSum surd_to_sum(const Surd& s) { return PhasedSurdSum::from_surd(s); }

std::ostream& operator<<(std::ostream& os, const PhasedSurdSum& s);

}  // namespace jcouple
