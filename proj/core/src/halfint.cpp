#include "jcouple/numerics/halfint.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace jcouple {

std::int64_t HalfInt::as_integer() const {
  if (!is_integer()) throw DomainError(to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

namespace {

[[noreturn]] void reject(std::string_view text, const char* why) {
  throw DomainError("cannot parse '" + std::string(text) + "' as a half-integer: " + why);
}

std::int64_t parse_int(std::string_view whole, std::string_view part) {
  if (part.empty()) reject(whole, "missing digits");
  std::string_view digits = part;
  if (digits.front() == '+') digits.remove_prefix(1);
  if (digits.empty() || digits.front() == '+') reject(whole, "missing digits");
  std::int64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc() || ptr != end) reject(whole, "not a number");
  return value;
}

}  // namespace

HalfInt parse_halfint(std::string_view text) {
  if (text.empty()) reject(text, "empty");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text, text.substr(0, slash));
    const std::int64_t den = parse_int(text, text.substr(slash + 1));
    if (den == 1) return HalfInt(num);
    if (den == 2) return HalfInt::from_twice(num);
    reject(text, "denominator must be 1 or 2");
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    const bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(text, int_part);
    if (whole < 0) reject(text, "misplaced sign");
    std::int64_t twice = 2 * whole;
    if (frac == "5") {
      twice += 1;
    } else if (frac != "0") {
      reject(text, "fractional part must be .5 or .0");
    }
    return HalfInt::from_twice(negative ? -twice : twice);
  }
  return HalfInt(parse_int(text, text));
}

Parity classify(HalfInt h) {
  if (h.twice() < 0) throw DomainError("classify expects a nonnegative value, got " + h.to_string());
  return h.is_integer() ? Parity::Natural : Parity::HalfOdd;
}

SignedClass classify_signed(HalfInt h) {
  if (h.twice() >= 0) return h.is_integer() ? SignedClass::Natural : SignedClass::HalfOdd;
  return h.is_integer() ? SignedClass::NegativeNatural : SignedClass::NegativeHalfOdd;
}

int minus_one_power(HalfInt h) {
  const std::int64_t n = h.as_integer();
  return (n % 2 == 0) ? 1 : -1;
}

}  // namespace jcouple
