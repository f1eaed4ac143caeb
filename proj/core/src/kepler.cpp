#include "jcouple/kepler.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "jcouple/errors.hpp"

namespace jcouple {

namespace {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Cyclic permutations of (1,2,3) are even.
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

const GaussianRational kI{0, 1};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw DomainError("degeneracy overflows 64 bits");
  }
  return a * b;
}

void require_non_negative(std::span<const HalfInt> js) {
  for (const auto& j : js) {
    if (j < HalfInt(0)) throw DomainError("j must be non-negative, got " + j.to_string());
  }
}

}  // namespace

std::string LieBasisElement::to_string() const {
  std::ostringstream os;
  os << (family == LieFamily::L ? "L" : "M'") << '_' << particle << ',' << axis;
  return os.str();
}

LieExpression LieExpression::of(const LieBasisElement& e, GaussianRational coeff) {
  LieExpression out;
  out.add(e, coeff);
  return out;
}

LieExpression& LieExpression::add(const LieBasisElement& e, const GaussianRational& coeff) {
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

LieExpression& LieExpression::operator+=(const LieExpression& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LieExpression operator-(LieExpression a, const LieExpression& b) {
  for (const auto& [e, c] : b.terms_) a.add(e, -c);
  return a;
}

LieExpression operator*(const GaussianRational& c, const LieExpression& e) {
  LieExpression out;
  for (const auto& [b, coeff] : e.terms_) out.add(b, c * coeff);
  return out;
}

std::string LieExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + e.to_string();
  }
  return out;
}

std::vector<LieBasisElement> lie_basis(int z) {
  if (z < 1) throw DomainError("Z must be at least 1");
  std::vector<LieBasisElement> out;
  out.reserve(static_cast<std::size_t>(6 * z));
  for (int p = 1; p <= z; ++p) {
    for (auto f : {LieFamily::L, LieFamily::MPrime}) {
      for (int a = 1; a <= 3; ++a) out.push_back({p, f, a});
    }
  }
  return out;
}

LieExpression commutator(const LieBasisElement& a, const LieBasisElement& b) {
  LieExpression out;
  if (a.particle != b.particle) return out;
  // [L, M'] is the only pairing without a direct table entry.
  if (a.family == LieFamily::L && b.family == LieFamily::MPrime) {
    return GaussianRational{-1, 0} * commutator(b, a);
  }
  const LieFamily result_family =
      (a.family == b.family) ? LieFamily::L : LieFamily::MPrime;
  for (int k = 1; k <= 3; ++k) {
    const int eps = levi_civita(a.axis, b.axis, k);
    if (eps != 0) out.add({a.particle, result_family, k}, GaussianRational{0, eps});
  }
  return out;
}

LieExpression commutator(const LieExpression& a, const LieExpression& b) {
  LieExpression out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out += (ca * cb) * commutator(ea, eb);
  }
  return out;
}

LieExpression split_generator(int alpha, int particle, int axis) {
  if (alpha != 1 && alpha != 2) throw DomainError("alpha must be 1 or 2");
  if (particle < 1 || axis < 1 || axis > 3) throw DomainError("generator index out of range");
  const Rational half(1, 2);
  LieExpression out;
  out.add({particle, LieFamily::L, axis}, {half, 0});
  out.add({particle, LieFamily::MPrime, axis}, {alpha == 1 ? half : -half, 0});
  return out;
}

So4SplitReport so4_split_check(int z) {
  if (z < 1) throw DomainError("Z must be at least 1");
  So4SplitReport report;
  report.z = z;
  for (int alpha = 1; alpha <= 2; ++alpha) {
    for (int beta = 1; beta <= 2; ++beta) {
      for (int pi = 1; pi <= z; ++pi) {
        for (int pj = 1; pj <= z; ++pj) {
          for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
              const auto computed =
                  commutator(split_generator(alpha, pi, i), split_generator(beta, pj, j));
              LieExpression expected;
              if (alpha == beta && pi == pj) {
                for (int k = 1; k <= 3; ++k) {
                  const int eps = levi_civita(i, j, k);
                  if (eps != 0) {
                    expected += GaussianRational{0, eps} * split_generator(alpha, pi, k);
                  }
                }
              }
              ++report.checked;
              if (!(computed == expected)) {
                report.mismatches.push_back({alpha, beta, pi, pj, i, j, computed, expected});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

Rational energy_level(HalfInt j) {
  if (j < HalfInt(0)) throw DomainError("j must be non-negative, got " + j.to_string());
  const Rational r = j.to_rational();
  const Rational d = 2 * r + 1;
  return -(r * r) / (d * d);
}

std::uint64_t degeneracy_paper(std::span<const HalfInt> js, Statistics stats) {
  require_non_negative(js);
  std::uint64_t prod = 1;
  for (const auto& j : js) prod = checked_mul(prod, static_cast<std::uint64_t>(j.twice() + 1));
  const std::uint64_t base = checked_mul(2, prod);
  if (stats == Statistics::Boson0) return base;
  return base + 2 * static_cast<std::uint64_t>(js.size());
}

std::uint64_t degeneracy_enumerated(std::span<const HalfInt> js, Statistics stats) {
  require_non_negative(js);
  std::uint64_t total = 1;
  for (const auto& j : js) {
    std::uint64_t kets = 0;
    for (int m1 = -j.twice(); m1 <= j.twice(); m1 += 2) {
      for (int m2 = -j.twice(); m2 <= j.twice(); m2 += 2) {
        if (stats == Statistics::FermionHalf) {
          for (int ms = -1; ms <= 1; ms += 2) ++kets;
        } else {
          ++kets;
        }
      }
    }
    total = checked_mul(total, kets);
  }
  return total;
}

KramersVerdict kramers_applicability(int z, Statistics stats) {
  if (z < 1) throw DomainError("Z must be at least 1");
  if (stats == Statistics::FermionHalf && z % 2 == 1) return KramersVerdict::GuaranteedDouble;
  return KramersVerdict::NotInferable;
}

Spectrum spectrum(int z, HalfInt j_cut, Statistics stats, std::uint64_t max_states) {
  if (z < 1) throw DomainError("Z must be at least 1");
  if (j_cut < HalfInt(0)) throw DomainError("j_cut must be non-negative");
  const auto per_particle = static_cast<std::uint64_t>(j_cut.twice() + 1);
  if (static_cast<std::uint64_t>(z) * per_particle > max_states) {
    throw DomainError("spectrum too large: Z(2 j_cut + 1) exceeds " + std::to_string(max_states));
  }
  std::uint64_t tuples = 1;
  for (int i = 0; i < z; ++i) {
    tuples *= per_particle;
    if (tuples > max_states) {
      throw DomainError("spectrum too large: more than " + std::to_string(max_states) + " j-tuples");
    }
  }

  Spectrum out;
  out.z = z;
  out.j_cut = j_cut;
  out.statistics = stats;
  out.kramers = kramers_applicability(z, stats);
  out.levels.reserve(tuples);

  std::vector<int> twice(static_cast<std::size_t>(z), 0);
  std::vector<HalfInt> js(static_cast<std::size_t>(z));
  while (true) {
    Rational energy = 0;
    for (std::size_t i = 0; i < twice.size(); ++i) {
      js[i] = HalfInt::from_twice(twice[i]);
      energy += energy_level(js[i]);
    }
    out.levels.push_back({js, energy, degeneracy_paper(js, stats), degeneracy_enumerated(js, stats), stats});

    std::size_t pos = twice.size();
    while (pos > 0 && twice[pos - 1] == j_cut.twice()) twice[--pos] = 0;
    if (pos == 0) break;
    ++twice[pos - 1];
  }

  std::map<Rational, MergedLevel> merged;
  for (const auto& level : out.levels) {
    auto& m = merged[level.energy];
    m.energy = level.energy;
    m.degeneracy_paper += level.degeneracy_paper;
    m.degeneracy_enumerated += level.degeneracy_enumerated;
    ++m.tuples;
  }
  out.merged.reserve(merged.size());
  for (auto& [e, m] : merged) out.merged.push_back(std::move(m));
  return out;
}

std::string to_string(Statistics stats) {
  return stats == Statistics::Boson0 ? "boson0" : "fermionHalf";
}

std::string to_string(KramersVerdict verdict) {
  return verdict == KramersVerdict::GuaranteedDouble ? "guaranteed_double" : "not_inferable";
}

}  // namespace jcouple
