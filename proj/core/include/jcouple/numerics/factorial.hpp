#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jcouple/numerics/bigint.hpp"

namespace jcouple {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// n! as a map prime -> exponent, built with Legendre's formula.
class FactorizedFactorial {
 public:
  explicit FactorizedFactorial(std::uint32_t n);

  std::uint32_t n() const { return n_; }
  const std::map<std::uint32_t, std::uint32_t>& exponents() const { return exponents_; }

  /// Multiplies the prime powers back together.
  BigInt value() const;

 private:
  std::uint32_t n_;
  std::map<std::uint32_t, std::uint32_t> exponents_;
};

inline FactorizedFactorial factorial_factorized(std::uint32_t n) { return FactorizedFactorial(n); }

/// Memoized n!. Safe to call concurrently; the reference stays valid for the
/// lifetime of the process.
const BigInt& factorial(std::uint32_t n);

/// A product of prime powers with signed exponents, used to accumulate ratios
/// of factorials without intermediate overflow or gcd work.
class PrimePowerProduct {
 public:
  PrimePowerProduct& multiply_factorial(std::uint32_t n, int power = 1);
  PrimePowerProduct& multiply_integer(std::uint64_t value, int power = 1);

  const std::map<std::uint32_t, std::int64_t>& exponents() const { return exponents_; }
  Rational to_rational() const;

 private:
  std::map<std::uint32_t, std::int64_t> exponents_;
};

}  // namespace jcouple
