#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jcouple/numerics.hpp"

namespace jcouple {

// Free Lie algebra over the generators L_Ii and M'_Ii (rescaled
// Laplace-Runge-Lenz) of Z independent Kepler particles.

enum class LieFamily { L, MPrime };

struct LieBasisElement {
  int particle = 1;  // 1..Z
  LieFamily family = LieFamily::L;
  int axis = 1;  // 1..3

  friend auto operator<=>(const LieBasisElement&, const LieBasisElement&) = default;
  std::string to_string() const;
};

class LieExpression {
 public:
  using Terms = std::map<LieBasisElement, GaussianRational>;

  LieExpression() = default;
  static LieExpression of(const LieBasisElement& e, GaussianRational coeff = {1, 0});

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LieExpression& add(const LieBasisElement& e, const GaussianRational& coeff);
  LieExpression& operator+=(const LieExpression& o);
  friend LieExpression operator+(LieExpression a, const LieExpression& b) { return a += b; }
  friend LieExpression operator-(LieExpression a, const LieExpression& b);
  friend LieExpression operator*(const GaussianRational& c, const LieExpression& e);
  friend bool operator==(const LieExpression&, const LieExpression&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// All 6Z basis elements, ordered by particle, family, axis.
std::vector<LieBasisElement> lie_basis(int z);

/// Structure constants:
///   [L_Ii, L_Jj]   = i d_IJ e_ijk L_Ik
///   [M'_Ii, M'_Jj] = i d_IJ e_ijk L_Ik
///   [M'_Ii, L_Jj]  = i d_IJ e_ijk M'_Ik
/// and [L, M'] by antisymmetry.
LieExpression commutator(const LieBasisElement& a, const LieBasisElement& b);
/// Bilinear extension of the table.
LieExpression commutator(const LieExpression& a, const LieExpression& b);

/// J_(1)Ii = (L_Ii + M'_Ii) / 2 for alpha = 1, J_(2)Ii = (L_Ii - M'_Ii) / 2 for alpha = 2.
LieExpression split_generator(int alpha, int particle, int axis);

struct So4Mismatch {
  int alpha, beta, particle_a, particle_b, axis_a, axis_b;
  LieExpression computed;
  LieExpression expected;
};

struct So4SplitReport {
  int z = 0;
  std::size_t checked = 0;
  std::vector<So4Mismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Expands every [J_(a)Ii, J_(b)Jj] through the structure constants and
/// compares with i d_ab d_IJ e_ijk J_(a)Ik. Throws DomainError for z < 1.
So4SplitReport so4_split_check(int z);

/// -j^2 / (2j + 1)^2.
Rational energy_level(HalfInt j);

enum class Statistics { Boson0, FermionHalf };

/// Closed forms: 2 prod(2j+1) for spin-0 bosons, 2Z + 2 prod(2j+1) for
/// spin-1/2 fermions.
std::uint64_t degeneracy_paper(std::span<const HalfInt> js, Statistics stats);

/// Counts basis kets |j_I m_(1)I m_(2)I [m_(s)I]> by enumerating each
/// particle's projections; j_(2)I = j_(1)I is imposed.
std::uint64_t degeneracy_enumerated(std::span<const HalfInt> js, Statistics stats);

enum class KramersVerdict { GuaranteedDouble, NotInferable };

/// Spin-1/2 fermions with odd Z give T^2 = -1 on every ket; everything else
/// gives T^2 = +1 and no degeneracy can be inferred.
KramersVerdict kramers_applicability(int z, Statistics stats);

struct KeplerLevel {
  std::vector<HalfInt> js;
  Rational energy;
  std::uint64_t degeneracy_paper = 0;
  std::uint64_t degeneracy_enumerated = 0;
  Statistics statistics = Statistics::Boson0;

  bool degeneracies_agree() const { return degeneracy_paper == degeneracy_enumerated; }
};

struct MergedLevel {
  Rational energy;
  std::uint64_t degeneracy_paper = 0;
  std::uint64_t degeneracy_enumerated = 0;
  std::size_t tuples = 0;
};

struct Spectrum {
  int z = 0;
  HalfInt j_cut;
  Statistics statistics = Statistics::Boson0;
  KramersVerdict kramers = KramersVerdict::NotInferable;
  std::vector<KeplerLevel> levels;   // one per j-tuple, lexicographic
  std::vector<MergedLevel> merged;   // equal energies summed, ascending energy
};

inline constexpr std::uint64_t kMaxSpectrumStates = 1'000'000;

/// All j-tuples with 0 <= j_I <= j_cut in half-integer steps. Throws
/// DomainError for z < 1, negative j_cut, or when Z(2 j_cut + 1) or the number
/// of tuples exceeds max_states.
Spectrum spectrum(int z, HalfInt j_cut, Statistics stats, std::uint64_t max_states = kMaxSpectrumStates);

std::string to_string(Statistics stats);
std::string to_string(KramersVerdict verdict);

}  // namespace jcouple
