#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jcouple/coupling.hpp"
#include "jcouple/numerics.hpp"

namespace jcouple {

/// A power of the imaginary unit, i^k with k taken mod 4.
class PhaseI {
 public:
  constexpr PhaseI() = default;
  static constexpr PhaseI i_power(std::int64_t k) {
    PhaseI p;
    p.k_ = static_cast<int>(((k % 4) + 4) % 4);
    return p;
  }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return k_ % 2 == 0; }
  /// +1 or -1; throws DomainError for +-i.
  int real_sign() const;
  GaussianRational value() const { return GaussianRational{1, 0}.times_i_power(k_); }

  constexpr PhaseI conj() const { return i_power(-k_); }
  friend constexpr PhaseI operator*(PhaseI a, PhaseI b) { return i_power(a.k_ + b.k_); }
  friend constexpr bool operator==(PhaseI, PhaseI) = default;

  std::string to_string() const;

 private:
  int k_ = 0;
};

/// i^(2m), the phase picked up by |j, m> under time reversal.
constexpr PhaseI t_phase(HalfInt m) { return PhaseI::i_power(m.twice()); }

/// (-1)^(2j): the eigenvalue of T^2 on any |j, m>.
int t_squared_sign(HalfInt j);

/// +1 if an even number of the js are half-odd, -1 otherwise.
int coupled_univalence(std::span<const HalfInt> js);

/// Truth of (-1)^(2(sum js - j)) == 1. Throws DomainError when j is not one
/// of {jmin(js), ..., jmax(js)}.
bool check_compatibility(std::span<const HalfInt> js, HalfInt j);

struct JmPair {
  HalfInt j, m;
  friend bool operator==(const JmPair&, const JmPair&) = default;
};

/// phase * magnitude * |j1 m1, ..., jn mn>.
struct TStateTerm {
  std::vector<JmPair> ket;
  PhaseI phase;
  Surd magnitude;

  friend bool operator==(const TStateTerm&, const TStateTerm&) = default;
};

/// T acting termwise: |m1..mn> -> i^(2 sum m) |-m1..-mn>, coefficients conjugated.
std::vector<TStateTerm> apply_time_reversal(const StateExpansion& expansion);
std::vector<TStateTerm> apply_time_reversal(std::span<const TStateTerm> terms);

struct FirstSymmetryAudit {
  Surd lhs;                    // generalized coefficient at (ms, m)
  Surd rhs;                    // generalized coefficient at (-ms, -m)
  std::optional<Surd> ratio;   // rhs / lhs; empty when lhs == 0
  int claimed = 1;             // the sign-free claim rhs == lhs
  int expected = 1;            // (-1)^(sum js - j)
  bool agrees() const { return ratio && *ratio == Surd::from_rational(claimed); }
};

FirstSymmetryAudit audit_first_symmetry(const CouplingChain& chain, std::span<const HalfInt> ms, HalfInt total_m);

enum class SecondSymmetryReading {
  /// second coefficient chain evaluated at upper projection -m
  PaperLiteral,
  /// second coefficient chain evaluated at upper projection +m (same ket)
  SameState,
};

/// sum over all projection tuples of
///   i^(-2 sum m) C(ms; m) C(-ms; m')
/// with m' = -m (PaperLiteral) or m' = m (SameState).
/// Throws DomainError unless total_j is half-odd and |total_m| <= total_j.
PhasedSurdSum audit_second_symmetry(const CouplingChain& chain, HalfInt total_m, SecondSymmetryReading reading);

/// <psi | T psi> for psi = |chain, total_m>, contracted in the uncoupled basis.
PhasedSurdSum kramers_overlap(const CouplingChain& chain, HalfInt total_m);

}  // namespace jcouple
