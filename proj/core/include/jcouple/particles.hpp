#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jcouple/numerics.hpp"

namespace jcouple {

/// A compound particle as nested membership: a leaf carries the univalence
/// (+1 boson, -1 fermion) of a basic particle, a node lists its subparticles.
class ParticleTree {
 public:
  /// Throws DomainError unless univalence is +1 or -1.
  static ParticleTree leaf(int univalence);
  /// Throws DomainError for an empty child list.
  static ParticleTree node(std::vector<ParticleTree> children);

  bool is_leaf() const { return std::holds_alternative<int>(content_); }
  int univalence_of_leaf() const;
  const std::vector<ParticleTree>& children() const;

  /// Nested-list text, e.g. "[[-1,-1,-1],-1]".
  std::string to_string() const;

 private:
  std::variant<int, std::vector<ParticleTree>> content_ = 1;
};

/// A leaf is a fermion iff its univalence is -1; a node iff an odd number of
/// its children are fermions.
bool is_fermion(const ParticleTree& p);

/// A bijection of {0, ..., n-1}; image()[k] is where k is sent.
class Permutation {
 public:
  /// Throws DomainError unless image is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);
  /// From 1-based images, as in (2,3,1).
  static Permutation from_one_based(std::span<const std::size_t> image);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }

  /// Entry k of the result is args[image()[k]].
  template <class T>
  std::vector<T> apply(const std::vector<T>& args) const {
    std::vector<T> out;
    out.reserve(args.size());
    for (const std::size_t k : image_) out.push_back(args[k]);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// (-1)^inversions.
int signature(const Permutation& perm);

/// All n! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t n);

/// Function values tabulated on argument tuples.
template <class T>
using ValueTable = std::map<std::vector<T>, PhasedSurdSum>;

namespace detail {

template <class T>
PhasedSurdSum average_over_permutations(const ValueTable<T>& f, const std::vector<T>& args, bool signed_sum) {
  PhasedSurdSum total;
  Rational count = 0;
  for (const Permutation& p : all_permutations(args.size())) {
    const auto it = f.find(p.apply(args));
    if (it == f.end()) throw DomainError("value table has no entry for a permutation of the arguments");
    total += (signed_sum && signature(p) < 0) ? -it->second : it->second;
    count += 1;
  }
  return total.scaled(Rational(1) / count);
}

}  // namespace detail

/// (1/n!) sum over permutations p of f(p(args)).
template <class T>
PhasedSurdSum symmetrize(const ValueTable<T>& f, const std::vector<T>& args) {
  return detail::average_over_permutations(f, args, false);
}

/// (1/n!) sum over permutations p of sgn(p) f(p(args)).
template <class T>
PhasedSurdSum antisymmetrize(const ValueTable<T>& f, const std::vector<T>& args) {
  return detail::average_over_permutations(f, args, true);
}

/// Swaps entries at the 1-based positions of pair. Throws DomainError for
/// out-of-range or equal positions.
template <class T>
std::vector<T> exchange(const std::vector<T>& args, std::pair<std::size_t, std::size_t> pair) {
  const auto [a, b] = pair;
  if (a == b || a < 1 || b < 1 || a > args.size() || b > args.size()) {
    throw DomainError("exchange needs two distinct positions in 1.." + std::to_string(args.size()));
  }
  std::vector<T> out = args;
  std::swap(out[a - 1], out[b - 1]);
  return out;
}

}  // namespace jcouple
