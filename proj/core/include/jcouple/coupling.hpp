#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jcouple/numerics.hpp"

namespace jcouple {

/// sum of js. Throws DomainError for fewer than two momenta.
HalfInt jmax(std::span<const HalfInt> js);

/// Smallest total reachable by coupling js in sequence: |j1 - j2| for two
/// momenta, otherwise min |i - jn| over i in {jmin(j1..jn-1), ..., jmax(j1..jn-1)}.
HalfInt jmin(std::span<const HalfInt> js);

/// Sequential coupling scheme j1 + j2 -> j12, j12 + j3 -> j123, ..., -> j.
///
/// A single momentum (n = 1) is accepted as the trivial chain with
/// total_j == j1; it is what a one-particle state looks like to the
/// time-reversal routines.
class CouplingChain {
 public:
  /// Throws DomainError if any coupling step violates the triangle rule.
  CouplingChain(std::vector<HalfInt> js, std::vector<HalfInt> intermediates, HalfInt total_j);

  const std::vector<HalfInt>& js() const { return js_; }
  const std::vector<HalfInt>& intermediates() const { return intermediates_; }
  HalfInt total_j() const { return total_j_; }
  std::size_t size() const { return js_.size(); }

  /// Coupled momentum after the first k momenta (1 <= k <= n): j1, j12, ..., j.
  HalfInt partial_j(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const CouplingChain&, const CouplingChain&) = default;
  friend auto operator<=>(const CouplingChain&, const CouplingChain&) = default;

 private:
  std::vector<HalfInt> js_;
  std::vector<HalfInt> intermediates_;
  HalfInt total_j_;
};

/// Every valid chain over js in lexicographic order of (intermediates, total),
/// optionally restricted to one total.
std::vector<CouplingChain> enumerate_chains(std::span<const HalfInt> js, std::optional<HalfInt> total_j = {});

/// All (m1, ..., mn) with |mi| <= ji, in lexicographic order; restricted to
/// sum == total_m when given.
std::vector<std::vector<HalfInt>> projection_tuples(std::span<const HalfInt> js,
                                                    std::optional<HalfInt> total_m = {});

/// Product of the n-1 Clebsch-Gordan factors along the chain, with running
/// projections m12 = m1 + m2, m123 = m12 + m3, ... Zero if sum(ms) != total_m.
Surd generalized_coupling_coefficient(const CouplingChain& chain, std::span<const HalfInt> ms, HalfInt total_m);

/// Coupled state |chain, total_m> written in the uncoupled product basis.
struct StateExpansion {
  CouplingChain chain;
  HalfInt total_m;
  /// One entry per projection tuple with sum == total_m (zeros included).
  std::map<std::vector<HalfInt>, Surd> amplitudes;

  Rational norm_squared() const;
  Surd amplitude(const std::vector<HalfInt>& ms) const;
};

/// Throws DomainError if |total_m| > total_j or total_m does not step from -total_j.
StateExpansion expand_coupled_state(const CouplingChain& chain, HalfInt total_m);

/// <a|b> for two expansions over the same js.
PhasedSurdSum overlap(const StateExpansion& a, const StateExpansion& b);

/// Leaf-labelled rooted binary tree describing one coupling scheme. Leaves
/// carry labels 1..n; every internal node is a Clebsch-Gordan vertex with two
/// entering edges and one exiting edge. Children are unordered: two trees are
/// equal when they pair the same subsets.
class CouplingTree {
 public:
  struct Node {
    int leaf = 0;  // 1..n for leaves, 0 for CG vertices
    int first = -1;
    int second = -1;
    int parent = -1;
  };

  /// ((1,2),3),...,n)
  static CouplingTree sequential(std::size_t n);

  std::size_t leaf_count() const { return (nodes_.size() + 1) / 2; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }

  /// Nested-parenthesis form with children ordered by smallest leaf, e.g. "((1,3),2)".
  std::string canonical() const;

  friend bool operator==(const CouplingTree& a, const CouplingTree& b) { return a.canonical() == b.canonical(); }

 private:
  friend class CouplingTreeBuilder;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// (2n-3)!! trees for n momenta.
inline constexpr std::uint64_t kDefaultMaxTrees = 34459425;  // n = 10

/// (2n - 3)!!; throws DomainError for n < 2 or on overflow.
std::uint64_t coupling_scheme_count(std::size_t n);

/// Streams every coupling tree with n leaves. Throws DomainError when n < 2 or
/// when (2n-3)!! exceeds max_trees.
void for_each_coupling_tree(std::size_t n, const std::function<void(const CouplingTree&)>& visit,
                            std::uint64_t max_trees = kDefaultMaxTrees);

std::vector<CouplingTree> enumerate_coupling_trees(std::size_t n, std::uint64_t max_trees = kDefaultMaxTrees);

/// Graphviz digraph: leaf edges "j<l>m<l>", internal edges carry the
/// concatenated labels of their leaves, CG vertices are boxes.
std::string export_dot(const CouplingTree& tree, std::span<const std::string> labels);

}  // namespace jcouple
