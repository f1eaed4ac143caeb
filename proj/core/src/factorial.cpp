#include "jcouple/numerics/factorial.hpp"

#include <deque>
#include <mutex>

#include <boost/multiprecision/integer.hpp>

namespace jcouple {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = std::uint64_t{p} * p; q <= n; q += p) composite[q] = true;
  }
  return primes;
}

FactorizedFactorial::FactorizedFactorial(std::uint32_t n) : n_(n) {
  for (const std::uint32_t p : primes_up_to(n)) {
    std::uint32_t exponent = 0;
    for (std::uint64_t power = p; power <= n; power *= p) exponent += static_cast<std::uint32_t>(n / power);
    exponents_.emplace(p, exponent);
  }
}

BigInt FactorizedFactorial::value() const {
  BigInt result = 1;
  for (const auto& [p, e] : exponents_) result *= boost::multiprecision::pow(BigInt(p), e);
  return result;
}

const BigInt& factorial(std::uint32_t n) {
  static std::mutex mutex;
  static std::deque<BigInt> table{BigInt(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

PrimePowerProduct& PrimePowerProduct::multiply_factorial(std::uint32_t n, int power) {
  const FactorizedFactorial f(n);
  for (const auto& [p, e] : f.exponents()) exponents_[p] += std::int64_t{power} * e;
  return *this;
}

PrimePowerProduct& PrimePowerProduct::multiply_integer(std::uint64_t value, int power) {
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      exponents_[static_cast<std::uint32_t>(p)] += power;
      value /= p;
    }
  }
  if (value > 1) exponents_[static_cast<std::uint32_t>(value)] += power;
  return *this;
}

Rational PrimePowerProduct::to_rational() const {
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& [p, e] : exponents_) {
    if (e > 0) {
      num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    } else if (e < 0) {
      den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-e));
    }
  }
  return Rational(num, den);
}

}  // namespace jcouple
