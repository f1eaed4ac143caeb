#pragma once

// Reference implementations used only by the tests. Each one is deliberately
// computed along a different route from the library code it checks.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "jcouple/kepler.hpp"
#include "jcouple/numerics.hpp"

namespace oracle {

using jcouple::BigInt;
using jcouple::HalfInt;
using jcouple::Rational;
using jcouple::Surd;

/// Clebsch-Gordan coefficient obtained by building J^2 = (J1 + J2)^2 as an
/// exact rational matrix in an unnormalized product basis, extracting the
/// highest-weight vector as its null space, and lowering with J-.
/// Condon-Shortley sign: <j1 j1 j2 (j-j1) | j j> > 0. Zero off-selection.
Surd cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

/// 3j symbol from the oracle CG with the standard (-1)^(j1-j2-m3) phase.
Surd three_j(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3);

/// Distinct reachable totals of sequentially coupling js, found by
/// composing the full |a-b|..a+b ranges set by set. Sorted ascending.
std::vector<HalfInt> reachable_totals(const std::vector<HalfInt>& js);

/// Counts basis kets by walking every (m1, m2[, ms]) assignment of every
/// particle jointly.
std::uint64_t count_kepler_kets(const std::vector<HalfInt>& js, jcouple::Statistics stats);

BigInt factorial_iterative(unsigned n);

/// prod_{k=1}^{n-1} (2k - 1).
std::uint64_t odd_double_factorial_count(unsigned n);

/// Canonical strings of every unordered leaf-labelled binary tree on leaves
/// 1..n, generated by recursive bipartition of the leaf set. Children are
/// written smallest-leaf first, e.g. "((1,3),2)".
std::set<std::string> trees_by_bipartition(unsigned n);

/// All HalfInt values from 0 to max in steps of 1/2.
std::vector<HalfInt> half_grid(HalfInt max);

/// All js tuples of the given length over half_grid(max).
std::vector<std::vector<HalfInt>> js_tuples(std::size_t n, HalfInt max);

}  // namespace oracle
