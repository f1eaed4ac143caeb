#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jcouple/numerics.hpp"

namespace jcouple {

/// Arguments of the Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>.
struct CgArgs {
  HalfInt j1, m1, j2, m2, j, m;

  friend bool operator==(const CgArgs&, const CgArgs&) = default;
};

/// Throws DomainError unless j1, j2, j >= 0, |m1| <= j1, |m2| <= j2 and
/// m1, m2 step from -j1, -j2 in integer units. The coupled projection m is
/// not constrained: out-of-range m just makes the coefficient vanish.
void validate(const CgArgs& args);

/// |j1 - j2| <= j <= j1 + j2 with j1 + j2 + j integral.
bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j);

/// m = m1 + m2, |m| <= j and j in {|j1-j2|, ..., j1+j2}.
bool cg_selection_ok(const CgArgs& args);

/// {|j1-j2|, |j1-j2|+1, ..., j1+j2}.
std::vector<HalfInt> allowed_j(HalfInt j1, HalfInt j2);

/// Exact Clebsch-Gordan coefficient in the Condon-Shortley convention, via
/// Racah's closed form over factorized factorials. Memoized.
/// Zero whenever cg_selection_ok is false.
Surd cg(const CgArgs& args);

/// sum over j, m of |<j1 m1 j2 m2 | j m>|^2; equals one.
Rational cg_normalization_sum(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2);

/// Columns (j1 m1), (j2 m2), (j3 m3) of a Wigner 3j symbol.
struct ThreeJArgs {
  HalfInt j1, m1, j2, m2, j3, m3;

  friend bool operator==(const ThreeJArgs&, const ThreeJArgs&) = default;
};

/// Which phase multiplies C^{j3,-m3}_{j1 m1 j2 m2} / sqrt(2 j3 + 1).
enum class ThreeJPhase {
  /// (-1)^(j1 - j2 - m3): the standard 3j symbol, carrier of the Regge group.
  Standard,
  /// (-1)^(j1 - j2 + m3): differs from Standard by (-1)^(2 j3).
  PlusM,
};

Surd three_j(const ThreeJArgs& args, ThreeJPhase phase = ThreeJPhase::Standard);

/// 3x3 Regge square of a 3j symbol. Every row and column sums to j1 + j2 + j3.
class RSymbol {
 public:
  using Matrix = std::array<std::array<std::int64_t, 3>, 3>;

  /// Throws DomainError for non-triangle or out-of-range arguments, or when
  /// m1 + m2 + m3 != 0.
  static RSymbol from_three_j(const ThreeJArgs& args);
  /// Throws DomainError unless entries are nonnegative and all row and column
  /// sums agree.
  static RSymbol from_matrix(const Matrix& entries);

  const Matrix& entries() const { return r_; }
  std::int64_t at(int row, int col) const { return r_[row][col]; }
  std::int64_t magic_sum() const { return r_[0][0] + r_[0][1] + r_[0][2]; }
  bool is_magic() const;

  ThreeJArgs to_three_j() const;

  /// Row k of the result is row perm[k] of this square (0-based).
  RSymbol rows_permuted(const std::array<int, 3>& perm) const;
  RSymbol cols_permuted(const std::array<int, 3>& perm) const;
  RSymbol transposed() const;

  friend bool operator==(const RSymbol&, const RSymbol&) = default;

 private:
  Matrix r_{};
};

inline RSymbol regge_symbol(const ThreeJArgs& args) { return RSymbol::from_three_j(args); }

struct ReggeAuditEntry {
  std::string transform;  // "rows(2,1,3)", "cols(1,3,2)", "transpose"
  int claimed = 1;        // epsilon_ijk for permutations, +1 for transposition
  Surd actual;            // value(transformed) / value(base)
  bool agrees = false;
};

/// Evaluates the 3j symbol on all 6 row permutations, 6 column permutations
/// and the transposition of its Regge square and compares each ratio with the
/// bare Levi-Civita multiplier. Throws DomainError when the base value is zero.
std::vector<ReggeAuditEntry> regge_orbit_audit(const ThreeJArgs& args);

}  // namespace jcouple
