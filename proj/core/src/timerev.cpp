#include "jcouple/timerev.hpp"

#include <map>

namespace jcouple {

int PhaseI::real_sign() const {
  if (!is_real()) throw DomainError("phase " + to_string() + " is not real");
  return k_ == 0 ? 1 : -1;
}

std::string PhaseI::to_string() const {
  static const char* const kText[] = {"1", "i", "-1", "-i"};
  return kText[k_];
}

int t_squared_sign(HalfInt j) {
  if (j.twice() < 0) throw DomainError("t_squared_sign expects j >= 0");
  return univalence_sign(j);
}

int coupled_univalence(std::span<const HalfInt> js) {
  int half_odd = 0;
  for (const HalfInt j : js) {
    if (classify(j) == Parity::HalfOdd) ++half_odd;
  }
  return half_odd % 2 == 0 ? 1 : -1;
}

bool check_compatibility(std::span<const HalfInt> js, HalfInt j) {
  const HalfInt lo = jmin(js);
  const HalfInt hi = jmax(js);
  if (j < lo || j > hi || (j - lo).is_half_odd()) {
    throw DomainError("j=" + j.to_string() + " is not in {" + lo.to_string() + ", ..., " + hi.to_string() + "}");
  }
  HalfInt sum;
  for (const HalfInt ji : js) sum += ji;
  // (-1)^(2x) == 1 exactly when 2x is even.
  const std::int64_t doubled = (sum - j).twice();
  return doubled % 2 == 0;
}

std::vector<TStateTerm> apply_time_reversal(const StateExpansion& expansion) {
  std::vector<TStateTerm> terms;
  terms.reserve(expansion.amplitudes.size());
  const auto& js = expansion.chain.js();
  for (const auto& [ms, amp] : expansion.amplitudes) {
    TStateTerm term;
    for (std::size_t i = 0; i < js.size(); ++i) term.ket.push_back({js[i], ms[i]});
    term.magnitude = amp;
    terms.push_back(std::move(term));
  }
  return apply_time_reversal(terms);
}

std::vector<TStateTerm> apply_time_reversal(std::span<const TStateTerm> terms) {
  std::vector<TStateTerm> out;
  out.reserve(terms.size());
  for (const TStateTerm& term : terms) {
    TStateTerm flipped;
    HalfInt sum;
    for (const JmPair& jm : term.ket) {
      flipped.ket.push_back({jm.j, -jm.m});
      sum += jm.m;
    }
    // Antilinear: the phase is conjugated; the Surd magnitude is real.
    flipped.phase = term.phase.conj() * t_phase(sum);
    flipped.magnitude = term.magnitude;
    out.push_back(std::move(flipped));
  }
  return out;
}

namespace {

std::vector<HalfInt> negated(std::span<const HalfInt> ms) {
  std::vector<HalfInt> out;
  out.reserve(ms.size());
  for (const HalfInt m : ms) out.push_back(-m);
  return out;
}

HalfInt sum_of(std::span<const HalfInt> values) {
  HalfInt total;
  for (const HalfInt v : values) total += v;
  return total;
}

}  // namespace

FirstSymmetryAudit audit_first_symmetry(const CouplingChain& chain, std::span<const HalfInt> ms, HalfInt total_m) {
  FirstSymmetryAudit audit;
  audit.lhs = generalized_coupling_coefficient(chain, ms, total_m);
  const std::vector<HalfInt> flipped = negated(ms);
  audit.rhs = generalized_coupling_coefficient(chain, flipped, -total_m);
  if (!audit.lhs.is_zero()) audit.ratio = audit.rhs / audit.lhs;
  audit.expected = minus_one_power(sum_of(chain.js()) - chain.total_j());
  return audit;
}

PhasedSurdSum audit_second_symmetry(const CouplingChain& chain, HalfInt total_m, SecondSymmetryReading reading) {
  if (chain.total_j().is_integer()) {
    throw DomainError("second symmetry audit needs a half-odd total j, got " + chain.total_j().to_string());
  }
  if (abs(total_m) > chain.total_j() || (chain.total_j() - total_m).is_half_odd()) {
    throw DomainError("projection " + total_m.to_string() + " out of range for j=" + chain.total_j().to_string());
  }
  const HalfInt second_m = reading == SecondSymmetryReading::PaperLiteral ? -total_m : total_m;
  PhasedSurdSum total;
  for (const auto& ms : projection_tuples(chain.js())) {
    const Surd first = generalized_coupling_coefficient(chain, ms, total_m);
    if (first.is_zero()) continue;
    const Surd second = generalized_coupling_coefficient(chain, negated(ms), second_m);
    if (second.is_zero()) continue;
    total += PhasedSurdSum::from_surd(first * second).times_i_power(-sum_of(ms).twice());
  }
  return total;
}

PhasedSurdSum kramers_overlap(const CouplingChain& chain, HalfInt total_m) {
  const StateExpansion psi = expand_coupled_state(chain, total_m);
  PhasedSurdSum total;
  for (const TStateTerm& term : apply_time_reversal(psi)) {
    std::vector<HalfInt> ms;
    ms.reserve(term.ket.size());
    for (const JmPair& jm : term.ket) ms.push_back(jm.m);
    // psi has real amplitudes, so the bra contributes no conjugation.
    const Surd bra = psi.amplitude(ms);
    if (bra.is_zero() || term.magnitude.is_zero()) continue;
    total += PhasedSurdSum::from_surd(bra * term.magnitude).times_i_power(term.phase.exponent());
  }
  return total;
}

}  // namespace jcouple
