#include "jcouple/wigner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace jcouple {

namespace {

void check_projection(HalfInt j, HalfInt m, const char* label) {
  if (j.twice() < 0) throw DomainError(std::string(label) + " must be nonnegative, got " + j.to_string());
  if (abs(m) > j) {
    throw DomainError(std::string("|m| exceeds ") + label + ": m=" + m.to_string() + ", j=" + j.to_string());
  }
  if ((j - m).is_half_odd()) {
    throw DomainError(std::string("projection ") + m.to_string() + " does not step from -" + label + "=" +
                      (-j).to_string() + " in unit steps");
  }
}

std::uint32_t fact_arg(std::int64_t twice) {
  // Every factorial argument in Racah's formula is integral and nonnegative
  // once the selection rules hold.
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("bad factorial argument in Racah formula");
  return static_cast<std::uint32_t>(twice / 2);
}

Surd racah_formula(const CgArgs& a) {
  const std::int64_t j1 = a.j1.twice(), m1 = a.m1.twice();
  const std::int64_t j2 = a.j2.twice(), m2 = a.m2.twice();
  const std::int64_t j = a.j.twice(), m = a.m.twice();

  PrimePowerProduct prefactor;
  prefactor.multiply_integer(static_cast<std::uint64_t>(j + 1));
  prefactor.multiply_factorial(fact_arg(j1 + j2 - j))
      .multiply_factorial(fact_arg(j1 - j2 + j))
      .multiply_factorial(fact_arg(-j1 + j2 + j))
      .multiply_factorial(fact_arg(j1 + j2 + j + 2), -1)
      .multiply_factorial(fact_arg(j1 + m1))
      .multiply_factorial(fact_arg(j1 - m1))
      .multiply_factorial(fact_arg(j2 + m2))
      .multiply_factorial(fact_arg(j2 - m2))
      .multiply_factorial(fact_arg(j + m))
      .multiply_factorial(fact_arg(j - m));

  // k runs over integers; all bounds below are in twice-units.
  const std::int64_t k_lo = std::max<std::int64_t>({0, j2 - j - m1, j1 + m2 - j});
  const std::int64_t k_hi = std::min<std::int64_t>({j1 + j2 - j, j1 - m1, j2 + m2});
  Rational sum = 0;
  for (std::int64_t k = k_lo; k <= k_hi; k += 2) {
    BigInt den = factorial(fact_arg(k));
    den *= factorial(fact_arg(j1 + j2 - j - k));
    den *= factorial(fact_arg(j1 - m1 - k));
    den *= factorial(fact_arg(j2 + m2 - k));
    den *= factorial(fact_arg(j - j2 + m1 + k));
    den *= factorial(fact_arg(j - j1 - m2 + k));
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    sum += Rational(BigInt(sign), den);
  }
  if (sum == 0) return {};
  return Surd(sum > 0 ? 1 : -1, prefactor.to_rational() * sum * sum);
}

std::optional<std::uint64_t> cache_key(const CgArgs& a) {
  std::uint64_t key = 0;
  for (const HalfInt h : {a.j1, a.m1, a.j2, a.m2, a.j, a.m}) {
    const std::int64_t shifted = h.twice() + 512;
    if (shifted < 0 || shifted >= 1024) return std::nullopt;
    key = (key << 10) | static_cast<std::uint64_t>(shifted);
  }
  return key;
}

class CgCache {
 public:
  std::optional<Surd> find(std::uint64_t key) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    return std::nullopt;
  }
  void store(std::uint64_t key, const Surd& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Surd> table_;
};

CgCache& cg_cache() {
  static CgCache cache;
  return cache;
}

}  // namespace

void validate(const CgArgs& args) {
  check_projection(args.j1, args.m1, "j1");
  check_projection(args.j2, args.m2, "j2");
  if (args.j.twice() < 0) throw DomainError("j must be nonnegative, got " + args.j.to_string());
}

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j) {
  if (j1.twice() < 0 || j2.twice() < 0 || j.twice() < 0) return false;
  if ((j1 + j2 + j).is_half_odd()) return false;
  return abs(j1 - j2) <= j && j <= j1 + j2;
}

bool cg_selection_ok(const CgArgs& args) {
  return args.m == args.m1 + args.m2 && abs(args.m) <= args.j && triangle_ok(args.j1, args.j2, args.j);
}

std::vector<HalfInt> allowed_j(HalfInt j1, HalfInt j2) {
  if (j1.twice() < 0 || j2.twice() < 0) throw DomainError("allowed_j expects nonnegative momenta");
  std::vector<HalfInt> out;
  for (HalfInt j = abs(j1 - j2); j <= j1 + j2; j += 1) out.push_back(j);
  return out;
}

Surd cg(const CgArgs& args) {
  validate(args);
  if (!cg_selection_ok(args)) return {};
  const auto key = cache_key(args);
  if (key) {
    if (auto hit = cg_cache().find(*key)) return *hit;
  }
  Surd value = racah_formula(args);
  if (key) cg_cache().store(*key, value);
  return value;
}

Rational cg_normalization_sum(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2) {
  Rational total = 0;
  for (const HalfInt j : allowed_j(j1, j2)) {
    for (HalfInt m = -j; m <= j; m += 1) total += cg({j1, m1, j2, m2, j, m}).square();
  }
  return total;
}

Surd three_j(const ThreeJArgs& a, ThreeJPhase phase) {
  check_projection(a.j1, a.m1, "j1");
  check_projection(a.j2, a.m2, "j2");
  check_projection(a.j3, a.m3, "j3");
  if (a.m1 + a.m2 + a.m3 != HalfInt(0) || !triangle_ok(a.j1, a.j2, a.j3)) return {};
  const Surd coupled = cg({a.j1, a.m1, a.j2, a.m2, a.j3, -a.m3});
  if (coupled.is_zero()) return {};
  const HalfInt exponent = phase == ThreeJPhase::Standard ? a.j1 - a.j2 - a.m3 : a.j1 - a.j2 + a.m3;
  if (exponent.is_half_odd()) throw std::logic_error("half-odd 3j phase exponent with nonzero CG factor");
  const int sign = minus_one_power(exponent) * coupled.sign();
  return Surd(sign, coupled.radicand() / Rational(a.j3.twice() + 1));
}

}  // namespace jcouple
