#include "oracle.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

namespace {

// Unnormalized single-particle basis |m) = (J-)^(j-m) |j, j>.
// Squared norm: prod_{k=m+1}^{j} (j+k)(j-k+1).
Rational norm_squared(std::int64_t tj, std::int64_t tm) {
  Rational n = 1;
  for (std::int64_t tk = tm + 2; tk <= tj; tk += 2) {
    n *= Rational((tj + tk) / 2) * Rational((tj - tk) / 2 + 1);
  }
  return n;
}

// J+ |m) = (j+m+1)(j-m) |m+1)
Rational raise_factor(std::int64_t tj, std::int64_t tm) {
  return Rational((tj + tm) / 2 + 1) * Rational((tj - tm) / 2);
}

using Key = std::pair<std::int64_t, std::int64_t>;  // (2 m1, 2 m2)
using Vec = std::map<Key, Rational>;

// Highest-weight vector of total j in the M = j sector.
Vec highest_weight(std::int64_t tj1, std::int64_t tj2, std::int64_t tj) {
  std::vector<Key> basis;
  for (std::int64_t tm1 = tj1; tm1 >= -tj1; tm1 -= 2) {
    const std::int64_t tm2 = tj - tm1;
    if (tm2 >= -tj2 && tm2 <= tj2) basis.emplace_back(tm1, tm2);
  }
  const std::size_t d = basis.size();
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;

  // Matrix of J^2 - j(j+1) acting on column vectors of coefficients.
  const Rational jj = Rational(tj, 2) * (Rational(tj, 2) + 1);
  const Rational c1 = Rational(tj1, 2) * (Rational(tj1, 2) + 1);
  const Rational c2 = Rational(tj2, 2) * (Rational(tj2, 2) + 1);
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t col = 0; col < d; ++col) {
    const auto [tm1, tm2] = basis[col];
    a[col][col] += c1 + c2 + 2 * Rational(tm1, 2) * Rational(tm2, 2) - jj;
    // J1+ J2-
    if (tm1 < tj1 && tm2 > -tj2) {
      a[index.at({tm1 + 2, tm2 - 2})][col] += raise_factor(tj1, tm1);
    }
    // J1- J2+
    if (tm1 > -tj1 && tm2 < tj2) {
      a[index.at({tm1 - 2, tm2 + 2})][col] += raise_factor(tj2, tm2);
    }
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t p = row;
    while (p < d && a[p][col] == 0) ++p;
    if (p == d) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < d; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  if (d - row != 1) throw std::logic_error("oracle: highest-weight space is not one-dimensional");

  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  std::size_t free_col = 0;
  while (pivots.count(static_cast<int>(free_col))) ++free_col;
  std::vector<Rational> v(d, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];

  Vec out;
  for (std::size_t i = 0; i < d; ++i) {
    if (v[i] != 0) out[basis[i]] = v[i];
  }
  // Condon-Shortley: the m1 = j1 component is positive.
  const auto lead = out.find({tj1, tj - tj1});
  if (lead == out.end()) throw std::logic_error("oracle: vanishing m1 = j1 component");
  if (lead->second < 0) {
    for (auto& [k, x] : out) x = -x;
  }
  return out;
}

Vec lower(const Vec& v, std::int64_t tj1, std::int64_t tj2) {
  Vec out;
  for (const auto& [k, x] : v) {
    const auto [tm1, tm2] = k;
    if (tm1 > -tj1) out[{tm1 - 2, tm2}] += x;
    if (tm2 > -tj2) out[{tm1, tm2 - 2}] += x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

using TableKey = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
using Table = std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Surd>;  // (2m1, 2m2, 2m)

Table build_table(std::int64_t tj1, std::int64_t tj2, std::int64_t tj) {
  Table table;
  Vec v = highest_weight(tj1, tj2, tj);
  for (std::int64_t tm = tj; tm >= -tj; tm -= 2) {
    Rational total = 0;
    for (const auto& [k, x] : v) total += x * x * norm_squared(tj1, k.first) * norm_squared(tj2, k.second);
    for (const auto& [k, x] : v) {
      const Rational sq = x * x * norm_squared(tj1, k.first) * norm_squared(tj2, k.second) / total;
      table.emplace(std::make_tuple(k.first, k.second, tm), Surd(x > 0 ? 1 : -1, sq));
    }
    if (tm > -tj) v = lower(v, tj1, tj2);
  }
  return table;
}

const Table& table_for(std::int64_t tj1, std::int64_t tj2, std::int64_t tj) {
  static std::mutex mu;
  static std::map<TableKey, Table> cache;
  std::lock_guard lock(mu);
  const TableKey key{tj1, tj2, tj};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(tj1, tj2, tj)).first;
  return it->second;
}

}  // namespace

Surd cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  if (m1 + m2 != m) return Surd();
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m) > j) return Surd();
  if ((j1 + j2 - j).is_half_odd() || (m1 - j1).is_half_odd() || (m2 - j2).is_half_odd()) return Surd();
  if (j > j1 + j2 || j < abs(j1 - j2)) return Surd();
  const Table& t = table_for(j1.twice(), j2.twice(), j.twice());
  const auto it = t.find({m1.twice(), m2.twice(), m.twice()});
  return it == t.end() ? Surd() : it->second;
}

Surd three_j(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
  const Surd c = cg(j1, m1, j2, m2, j3, -m3);
  if (c.is_zero()) return c;
  const HalfInt e = j1 - j2 - m3;
  const int sign = (e.twice() / 2) % 2 == 0 ? 1 : -1;
  return Surd::from_rational(sign) * c / Surd(1, Rational(j3.twice() + 1));
}

std::vector<HalfInt> reachable_totals(const std::vector<HalfInt>& js) {
  std::set<HalfInt> current{js.at(0)};
  for (std::size_t i = 1; i < js.size(); ++i) {
    std::set<HalfInt> next;
    for (const HalfInt a : current) {
      for (HalfInt t = abs(a - js[i]); t <= a + js[i]; t += HalfInt(1)) next.insert(t);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::uint64_t count_kepler_kets(const std::vector<HalfInt>& js, jcouple::Statistics stats) {
  // One slot per quantum number: (m1, m2) per particle, plus ms for fermions.
  std::vector<std::int64_t> lo, hi;
  for (const HalfInt j : js) {
    lo.push_back(-j.twice());
    hi.push_back(j.twice());
    lo.push_back(-j.twice());
    hi.push_back(j.twice());
    if (stats == jcouple::Statistics::FermionHalf) {
      lo.push_back(-1);
      hi.push_back(1);
    }
  }
  std::vector<std::int64_t> cur = lo;
  std::set<std::vector<std::int64_t>> seen;
  while (true) {
    seen.insert(cur);
    std::size_t p = cur.size();
    while (p > 0 && cur[p - 1] == hi[p - 1]) {
      cur[p - 1] = lo[p - 1];
      --p;
    }
    if (p == 0) break;
    cur[p - 1] += 2;
  }
  return seen.size();
}

BigInt factorial_iterative(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t odd_double_factorial_count(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 1; k + 1 <= n; ++k) r *= 2 * k - 1;
  return r;
}

namespace {

std::vector<std::string> trees_on(const std::vector<unsigned>& leaves) {
  if (leaves.size() == 1) return {std::to_string(leaves[0])};
  std::vector<std::string> out;
  // The block holding the smallest leaf is written first; enumerate it by
  // bitmask over the remaining leaves so every split is seen exactly once.
  const std::size_t rest = leaves.size() - 1;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest); ++mask) {
    std::vector<unsigned> a{leaves[0]}, b;
    for (std::size_t i = 0; i < rest; ++i) ((mask >> i) & 1 ? a : b).push_back(leaves[i + 1]);
    for (const auto& ta : trees_on(a)) {
      for (const auto& tb : trees_on(b)) out.push_back("(" + ta + "," + tb + ")");
    }
  }
  return out;
}

}  // namespace

std::set<std::string> trees_by_bipartition(unsigned n) {
  std::vector<unsigned> leaves;
  for (unsigned k = 1; k <= n; ++k) leaves.push_back(k);
  const auto all = trees_on(leaves);
  return {all.begin(), all.end()};
}

std::vector<HalfInt> half_grid(HalfInt max) {
  std::vector<HalfInt> out;
  for (std::int64_t t = 0; t <= max.twice(); ++t) out.push_back(HalfInt::from_twice(t));
  return out;
}

std::vector<std::vector<HalfInt>> js_tuples(std::size_t n, HalfInt max) {
  std::vector<std::vector<HalfInt>> out{{}};
  const auto grid = half_grid(max);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<HalfInt>> next;
    for (const auto& t : out) {
      for (const HalfInt j : grid) {
        auto u = t;
        u.push_back(j);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
