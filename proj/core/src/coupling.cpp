#include "jcouple/coupling.hpp"

#include <algorithm>

#include "jcouple/wigner.hpp"

namespace jcouple {

namespace {

void require_pairwise(std::span<const HalfInt> js, const char* what) {
  if (js.size() < 2) throw DomainError(std::string(what) + " needs at least two momenta");
  for (const HalfInt j : js) {
    if (j.twice() < 0) throw DomainError(std::string(what) + ": negative momentum " + j.to_string());
  }
}

void check_projection_range(HalfInt j, HalfInt m) {
  if (abs(m) > j || (j - m).is_half_odd()) {
    throw DomainError("projection " + m.to_string() + " is not in {-" + j.to_string() + ", ..., " + j.to_string() +
                      "}");
  }
}

}  // namespace

HalfInt jmax(std::span<const HalfInt> js) {
  require_pairwise(js, "jmax");
  HalfInt total;
  for (const HalfInt j : js) total += j;
  return total;
}

HalfInt jmin(std::span<const HalfInt> js) {
  require_pairwise(js, "jmin");
  if (js.size() == 2) return abs(js[0] - js[1]);
  const auto head = js.first(js.size() - 1);
  const HalfInt last = js.back();
  const HalfInt hi = jmax(head);
  HalfInt best = abs(jmin(head) - last);
  for (HalfInt i = jmin(head); i <= hi; i += 1) best = std::min(best, abs(i - last));
  return best;
}

CouplingChain::CouplingChain(std::vector<HalfInt> js, std::vector<HalfInt> intermediates, HalfInt total_j)
    : js_(std::move(js)), intermediates_(std::move(intermediates)), total_j_(total_j) {
  if (js_.empty()) throw DomainError("a coupling chain needs at least one momentum");
  for (const HalfInt j : js_) {
    if (j.twice() < 0) throw DomainError("negative momentum " + j.to_string() + " in coupling chain");
  }
  const std::size_t expected = js_.size() >= 2 ? js_.size() - 2 : 0;
  if (intermediates_.size() != expected) {
    throw DomainError("a chain of " + std::to_string(js_.size()) + " momenta needs " + std::to_string(expected) +
                      " intermediate values, got " + std::to_string(intermediates_.size()));
  }
  if (js_.size() == 1) {
    if (total_j_ != js_[0]) throw DomainError("a single-momentum chain must have total_j == j1");
    return;
  }
  for (std::size_t k = 2; k <= js_.size(); ++k) {
    if (!triangle_ok(partial_j(k - 1), js_[k - 1], partial_j(k))) {
      throw DomainError("coupling step " + partial_j(k - 1).to_string() + " + " + js_[k - 1].to_string() +
                        " -> " + partial_j(k).to_string() + " violates the triangle rule");
    }
  }
}

HalfInt CouplingChain::partial_j(std::size_t k) const {
  if (k == 0 || k > js_.size()) throw DomainError("partial_j index out of range");
  if (k == 1) return js_[0];
  if (k == js_.size()) return total_j_;
  return intermediates_[k - 2];
}

std::string CouplingChain::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < js_.size(); ++i) out += (i ? "," : "") + js_[i].to_string();
  out += "}";
  for (const HalfInt j : intermediates_) out += " " + j.to_string();
  out += " -> " + total_j_.to_string();
  return out;
}

std::vector<CouplingChain> enumerate_chains(std::span<const HalfInt> js, std::optional<HalfInt> total_j) {
  require_pairwise(js, "enumerate_chains");
  std::vector<CouplingChain> out;
  std::vector<HalfInt> path;
  const std::vector<HalfInt> momenta(js.begin(), js.end());
  // path holds j12, j123, ..., j1..k
  std::function<void(HalfInt, std::size_t)> extend = [&](HalfInt coupled, std::size_t next) {
    for (const HalfInt j : allowed_j(coupled, momenta[next])) {
      if (next + 1 == momenta.size()) {
        if (!total_j || *total_j == j) out.emplace_back(momenta, path, j);
        continue;
      }
      path.push_back(j);
      extend(j, next + 1);
      path.pop_back();
    }
  };
  extend(momenta[0], 1);
  return out;
}

std::vector<std::vector<HalfInt>> projection_tuples(std::span<const HalfInt> js, std::optional<HalfInt> total_m) {
  std::vector<std::vector<HalfInt>> out;
  if (js.empty()) return out;
  for (const HalfInt j : js) {
    if (j.twice() < 0) throw DomainError("negative momentum " + j.to_string());
  }
  std::vector<HalfInt> ms;
  ms.reserve(js.size());
  for (const HalfInt j : js) ms.push_back(-j);
  while (true) {
    HalfInt sum;
    for (const HalfInt m : ms) sum += m;
    if (!total_m || sum == *total_m) out.push_back(ms);
    std::size_t i = js.size();
    while (i > 0) {
      --i;
      if (ms[i] < js[i]) {
        ms[i] += 1;
        break;
      }
      ms[i] = -js[i];
      if (i == 0) return out;
    }
  }
}

Surd generalized_coupling_coefficient(const CouplingChain& chain, std::span<const HalfInt> ms, HalfInt total_m) {
  if (ms.size() != chain.size()) {
    throw DomainError("expected " + std::to_string(chain.size()) + " projections, got " + std::to_string(ms.size()));
  }
  for (std::size_t i = 0; i < ms.size(); ++i) check_projection_range(chain.js()[i], ms[i]);
  HalfInt sum;
  for (const HalfInt m : ms) sum += m;
  if (sum != total_m) return {};

  Surd product(1, 1);
  HalfInt running = ms[0];
  for (std::size_t k = 2; k <= chain.size(); ++k) {
    const HalfInt coupled = chain.partial_j(k - 1);
    if (abs(running) > coupled) return {};
    const HalfInt next = running + ms[k - 1];
    product = product * cg({coupled, running, chain.js()[k - 1], ms[k - 1], chain.partial_j(k), next});
    if (product.is_zero()) return {};
    running = next;
  }
  if (abs(running) > chain.total_j()) return {};
  return product;
}

Rational StateExpansion::norm_squared() const {
  Rational total = 0;
  for (const auto& [ms, amp] : amplitudes) total += amp.square();
  return total;
}

Surd StateExpansion::amplitude(const std::vector<HalfInt>& ms) const {
  if (auto it = amplitudes.find(ms); it != amplitudes.end()) return it->second;
  return {};
}

StateExpansion expand_coupled_state(const CouplingChain& chain, HalfInt total_m) {
  check_projection_range(chain.total_j(), total_m);
  StateExpansion out{chain, total_m, {}};
  for (auto& ms : projection_tuples(chain.js(), total_m)) {
    Surd amp = generalized_coupling_coefficient(chain, ms, total_m);
    out.amplitudes.emplace(std::move(ms), std::move(amp));
  }
  return out;
}

PhasedSurdSum overlap(const StateExpansion& a, const StateExpansion& b) {
  if (a.chain.js() != b.chain.js()) throw DomainError("overlap of expansions over different momenta");
  PhasedSurdSum total;
  for (const auto& [ms, amp] : a.amplitudes) {
    if (amp.is_zero()) continue;
    const Surd other = b.amplitude(ms);
    if (!other.is_zero()) total += PhasedSurdSum::from_surd(amp * other);
  }
  return total;
}

}  // namespace jcouple
