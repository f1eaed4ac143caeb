#include "jcouple/wigner.hpp"

namespace jcouple {

namespace {

int levi_civita(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) inversions += p[a] > p[b] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string perm_label(const char* kind, const std::array<int, 3>& p) {
  return std::string(kind) + "(" + std::to_string(p[0] + 1) + "," + std::to_string(p[1] + 1) + "," +
         std::to_string(p[2] + 1) + ")";
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
}};

}  // namespace

RSymbol RSymbol::from_three_j(const ThreeJArgs& a) {
  if (!triangle_ok(a.j1, a.j2, a.j3)) throw DomainError("Regge symbol needs a triangle (j1, j2, j3)");
  if (a.m1 + a.m2 + a.m3 != HalfInt(0)) throw DomainError("Regge symbol needs m1 + m2 + m3 = 0");
  const HalfInt js[3] = {a.j1, a.j2, a.j3};
  const HalfInt ms[3] = {a.m1, a.m2, a.m3};
  for (int k = 0; k < 3; ++k) {
    if (abs(ms[k]) > js[k] || (js[k] - ms[k]).is_half_odd()) {
      throw DomainError("projection " + ms[k].to_string() + " out of range for j=" + js[k].to_string());
    }
  }
  RSymbol out;
  out.r_[0] = {(-a.j1 + a.j2 + a.j3).as_integer(), (a.j1 - a.j2 + a.j3).as_integer(),
               (a.j1 + a.j2 - a.j3).as_integer()};
  out.r_[1] = {(a.j1 + a.m1).as_integer(), (a.j2 + a.m2).as_integer(), (a.j3 + a.m3).as_integer()};
  out.r_[2] = {(a.j1 - a.m1).as_integer(), (a.j2 - a.m2).as_integer(), (a.j3 - a.m3).as_integer()};
  return out;
}

RSymbol RSymbol::from_matrix(const Matrix& entries) {
  RSymbol out;
  out.r_ = entries;
  for (const auto& row : entries) {
    for (const std::int64_t v : row) {
      if (v < 0) throw DomainError("Regge symbol entries must be nonnegative");
    }
  }
  if (!out.is_magic()) throw DomainError("Regge symbol rows and columns must share one sum");
  return out;
}

bool RSymbol::is_magic() const {
  const std::int64_t target = magic_sum();
  for (int k = 0; k < 3; ++k) {
    if (r_[k][0] + r_[k][1] + r_[k][2] != target) return false;
    if (r_[0][k] + r_[1][k] + r_[2][k] != target) return false;
  }
  return true;
}

ThreeJArgs RSymbol::to_three_j() const {
  return {HalfInt::from_twice(r_[0][1] + r_[0][2]), HalfInt::from_twice(r_[1][0] - r_[2][0]),
          HalfInt::from_twice(r_[0][0] + r_[0][2]), HalfInt::from_twice(r_[1][1] - r_[2][1]),
          HalfInt::from_twice(r_[0][0] + r_[0][1]), HalfInt::from_twice(r_[1][2] - r_[2][2])};
}

RSymbol RSymbol::rows_permuted(const std::array<int, 3>& perm) const {
  RSymbol out;
  for (int k = 0; k < 3; ++k) out.r_[k] = r_[perm[k]];
  return out;
}

RSymbol RSymbol::cols_permuted(const std::array<int, 3>& perm) const {
  RSymbol out;
  for (int row = 0; row < 3; ++row) {
    for (int k = 0; k < 3; ++k) out.r_[row][k] = r_[row][perm[k]];
  }
  return out;
}

RSymbol RSymbol::transposed() const {
  RSymbol out;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) out.r_[row][col] = r_[col][row];
  }
  return out;
}

std::vector<ReggeAuditEntry> regge_orbit_audit(const ThreeJArgs& args) {
  const RSymbol base = RSymbol::from_three_j(args);
  const Surd base_value = three_j(args);
  if (base_value.is_zero()) throw DomainError("Regge orbit audit needs a nonzero 3j symbol");

  std::vector<ReggeAuditEntry> report;
  auto record = [&](std::string name, int claimed, const RSymbol& image) {
    ReggeAuditEntry entry;
    entry.transform = std::move(name);
    entry.claimed = claimed;
    entry.actual = three_j(image.to_three_j()) / base_value;
    entry.agrees = entry.actual == Surd::from_rational(claimed);
    report.push_back(std::move(entry));
  };
  for (const auto& p : kPermutations) record(perm_label("rows", p), levi_civita(p), base.rows_permuted(p));
  for (const auto& p : kPermutations) record(perm_label("cols", p), levi_civita(p), base.cols_permuted(p));
  record("transpose", 1, base.transposed());
  return report;
}

}  // namespace jcouple
