#include "jcouple/particles.hpp"

#include <algorithm>
#include <numeric>

namespace jcouple {

ParticleTree ParticleTree::leaf(int univalence) {
  if (univalence != 1 && univalence != -1) {
    throw DomainError("a basic particle has univalence +1 or -1, got " + std::to_string(univalence));
  }
  ParticleTree p;
  p.content_ = univalence;
  return p;
}

ParticleTree ParticleTree::node(std::vector<ParticleTree> children) {
  if (children.empty()) throw DomainError("a compound particle needs at least one subparticle");
  ParticleTree p;
  p.content_ = std::move(children);
  return p;
}

int ParticleTree::univalence_of_leaf() const {
  if (!is_leaf()) throw DomainError("not a basic particle");
  return std::get<int>(content_);
}

const std::vector<ParticleTree>& ParticleTree::children() const {
  if (is_leaf()) throw DomainError("a basic particle has no subparticles");
  return std::get<std::vector<ParticleTree>>(content_);
}

std::string ParticleTree::to_string() const {
  if (is_leaf()) return std::to_string(univalence_of_leaf());
  std::string out = "[";
  for (const auto& child : children()) {
    if (out.size() > 1) out += ",";
    out += child.to_string();
  }
  return out + "]";
}

bool is_fermion(const ParticleTree& p) {
  if (p.is_leaf()) return p.univalence_of_leaf() == -1;
  const auto& kids = p.children();
  const auto fermions = std::count_if(kids.begin(), kids.end(), [](const ParticleTree& c) { return is_fermion(c); });
  return fermions % 2 == 1;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (const std::size_t k : image_) {
    if (k >= image_.size() || seen[k]) throw DomainError("not a permutation");
    seen[k] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> image) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(image.size());
  for (const std::size_t k : image) {
    if (k == 0) throw DomainError("1-based permutation entries start at 1");
    zero_based.push_back(k - 1);
  }
  return Permutation(std::move(zero_based));
}

int signature(const Permutation& perm) {
  const auto& image = perm.image();
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = a + 1; b < image.size(); ++b) inversions += image[a] > image[b] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace jcouple
