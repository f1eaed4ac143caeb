#include <doctest.h>

#include <set>

#include "../support/generators.hpp"
#include "../support/nuclei.hpp"
#include "jcouple/particles.hpp"

using namespace jcouple;

namespace {

ParticleTree random_tree(int depth) {
  if (depth == 0 || gen::uniform(0, 3) == 0) return ParticleTree::leaf(gen::uniform(0, 1) ? 1 : -1);
  std::vector<ParticleTree> kids;
  const int width = gen::uniform(1, 5);
  for (int k = 0; k < width; ++k) kids.push_back(random_tree(depth - 1));
  return ParticleTree::node(std::move(kids));
}

int fermion_leaves(const ParticleTree& p) {
  if (p.is_leaf()) return p.univalence_of_leaf() == -1 ? 1 : 0;
  int n = 0;
  for (const auto& c : p.children()) n += fermion_leaves(c);
  return n;
}

// Parity from the cycle decomposition.
int cycle_sign(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t k = s; !seen[k]; k = p.image()[k]) seen[k] = true;
  }
  return (p.size() - cycles) % 2 == 0 ? 1 : -1;
}

PhasedSurdSum r(int num, int den = 1) { return PhasedSurdSum::from_rational(Rational(num, den)); }

}  // namespace

TEST_CASE("is_fermion examples") {
  const auto f = ParticleTree::leaf(-1);
  const auto b = ParticleTree::leaf(1);
  CHECK(is_fermion(f));
  CHECK_FALSE(is_fermion(b));
  CHECK_FALSE(is_fermion(ParticleTree::node({f, f})));
  CHECK_FALSE(is_fermion(ParticleTree::node({ParticleTree::node({f, f, f}), b, f})));
  CHECK_THROWS_AS(ParticleTree::leaf(0), DomainError);
  CHECK_THROWS_AS(ParticleTree::node({}), DomainError);
  CHECK(ParticleTree::node({f, ParticleTree::node({b, f})}).to_string() == "[-1,[1,-1]]");
}

TEST_CASE("is_fermion equals the parity of fermionic leaves on random trees") {
  for (int k = 0; k < 500; ++k) {
    const ParticleTree t = random_tree(4);
    CHECK(is_fermion(t) == (fermion_leaves(t) % 2 == 1));
    if (t.is_leaf()) continue;
    auto kids = t.children();
    kids.push_back(ParticleTree::leaf(-1));
    CHECK(is_fermion(ParticleTree::node(kids)) != is_fermion(t));
    kids.back() = ParticleTree::leaf(1);
    CHECK(is_fermion(ParticleTree::node(kids)) == is_fermion(t));
  }
}

TEST_CASE("helium classifies the same under every decomposition") {
  for (const auto& e : nuclei::helium(2, 2)) CHECK_MESSAGE(!is_fermion(e.tree), "He-4 ", e.name);
  for (const auto& e : nuclei::helium(2, 1)) CHECK_MESSAGE(is_fermion(e.tree), "He-3 ", e.name);
  CHECK(nuclei::helium(2, 2).size() == 6);
}

TEST_CASE("signature examples and cycle parity") {
  CHECK(signature(Permutation::identity(3)) == 1);
  CHECK(signature(Permutation({1, 0, 2})) == -1);
  const std::vector<std::size_t> cycle{2, 3, 1};
  CHECK(signature(Permutation::from_one_based(cycle)) == 1);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& p : perms) {
      CHECK(signature(p) == cycle_sign(p));
      distinct.insert(p.image());
    }
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(perms.size() == fact);
    CHECK(distinct.size() == fact);
  }
}

TEST_CASE("symmetrize and antisymmetrize examples") {
  // f(x, y) = g(x) h(y), g(1)=2, g(2)=3, h(1)=5, h(2)=7
  ValueTable<int> gh{{{1, 2}, r(2 * 7)}, {{2, 1}, r(3 * 5)}};
  CHECK(antisymmetrize(gh, {1, 2}) == r(2 * 7 - 3 * 5, 2));
  CHECK(symmetrize(gh, {1, 2}) == r(2 * 7 + 3 * 5, 2));

  ValueTable<int> sym{{{1, 2}, r(4)}, {{2, 1}, r(4)}};
  CHECK(symmetrize(sym, {1, 2}) == r(4));
  ValueTable<int> anti{{{1, 2}, r(4)}, {{2, 1}, r(-4)}};
  CHECK(symmetrize(anti, {1, 2}).is_zero());
  CHECK(antisymmetrize(anti, {1, 2}) == r(4));

  ValueTable<int> partial{{{1, 2}, r(1)}};
  CHECK_THROWS_AS(symmetrize(partial, {1, 2}), DomainError);
}

TEST_CASE("(anti)symmetrized tables transform correctly under transpositions, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = 10 + i;
    ValueTable<int> f;
    for (const auto& p : all_permutations(static_cast<std::size_t>(n))) {
      f[p.apply(base)] = PhasedSurdSum::term(gen::uniform(1, 3), gen::gaussian());
    }
    const auto s = symmetrize(f, base);
    const auto a = antisymmetrize(f, base);
    for (std::size_t x = 1; x <= static_cast<std::size_t>(n); ++x) {
      for (std::size_t y = x + 1; y <= static_cast<std::size_t>(n); ++y) {
        const auto swapped = jcouple::exchange(base, {x, y});
        CHECK(symmetrize(f, swapped) == s);
        CHECK(antisymmetrize(f, swapped) == -a);
      }
    }
  }
}

TEST_CASE("exchange") {
  const std::vector<char> abc{'a', 'b', 'c'};
  CHECK(jcouple::exchange(abc, {1, 3}) == std::vector<char>{'c', 'b', 'a'});
  CHECK(jcouple::exchange(jcouple::exchange(abc, {1, 3}), {1, 3}) == abc);
  CHECK(jcouple::exchange(std::vector<char>{'a', 'b'}, {1, 2}) == std::vector<char>{'b', 'a'});
  CHECK_THROWS_AS(jcouple::exchange(abc, {2, 2}), DomainError);
  CHECK_THROWS_AS(jcouple::exchange(abc, {0, 1}), DomainError);
  CHECK_THROWS_AS(jcouple::exchange(abc, {1, 4}), DomainError);
}
