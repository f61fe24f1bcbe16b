#pragma once

// Random generators and brute-force oracles shared by the test binaries.

#include "isohom/abelian.hpp"
#include "isohom/extension.hpp"
#include "isohom/intlattice.hpp"
#include "isohom/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace isohom::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234abcdULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long long lo, long long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
  return m;
}

/// Determinant by cofactor expansion; independent of the library's Bareiss.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Determinantal divisors D_j = gcd of all j x j minors; the invariant
/// factors are D_j / D_{j-1}. Returns the nonzero diagonal d_1, ..., d_r.
inline std::vector<BigInt> smith_diagonal_by_minors(const IntMatrix& a) {
  std::vector<BigInt> divisors{1};
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t j = 1; j <= limit; ++j) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    combinations(a.rows(), j, 0, cur, rows);
    combinations(a.cols(), j, 0, cur, cols);
    BigInt g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<std::vector<BigInt>> sub;
        for (auto r : rs) {
          std::vector<BigInt> row;
          for (auto c : cs) row.push_back(a(r, c));
          sub.push_back(std::move(row));
        }
        BigInt d = cofactor_det(sub);
        g = gcd(g, d < 0 ? BigInt(-d) : d);
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<BigInt> diag;
  for (std::size_t j = 1; j < divisors.size(); ++j) diag.push_back(divisors[j] / divisors[j - 1]);
  return diag;
}

/// Subgroup spanned by gens, grown one cyclic piece at a time.
template <class T>
std::set<T> span_closure(const T& zero, const std::vector<T>& gens) {
  std::set<T> group{zero};
  for (const auto& g : gens) {
    if (group.count(g)) continue;
    std::vector<T> base(group.begin(), group.end());
    T step = g;
    while (!group.count(step)) {
      for (const auto& x : base) group.insert(x + step);
      step = step + g;
    }
  }
  return group;
}

inline AbElement random_element(const FinAbGroup& g) {
  std::vector<std::int64_t> c;
  for (auto k : g.orders()) c.push_back(uniform(0, k - 1));
  return g.element(std::move(c));
}

inline Letter random_letter(Factor f, std::size_t usable) {
  return {f, static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(usable) - 1)),
          uniform(0, 1) ? 1 : -1};
}

inline Word random_word(Factor f, std::size_t usable, std::size_t max_len) {
  Word w;
  const auto len = uniform(0, static_cast<std::int64_t>(max_len));
  for (std::int64_t i = 0; i < len; ++i) w.append(random_letter(f, usable));
  return w;
}

/// Random word whose degree in every generator is divisible by k.
inline Word random_admissible_word(Factor f, std::size_t usable, std::int64_t k,
                                   std::size_t max_len) {
  Word w = random_word(f, usable, max_len);
  const auto deg = w.degrees(f, usable);
  for (std::size_t i = 0; i < usable; ++i) {
    const auto missing = mod_floor(-deg[i], k);
    for (std::int64_t e = 0; e < missing; ++e) w.append({f, i, 1});
  }
  return w;
}

inline FabVector random_fab(const ProductAction& action) {
  FabVector z = FabVector::zero(action);
  for (auto& x : z.a) x = uniform(0, action.k - 1);
  for (auto& x : z.b) x = uniform(0, action.k - 1);
  return z;
}

/// Random invertible l x l matrix over Z/p.
inline std::vector<std::vector<std::int64_t>> random_invertible(std::size_t l, std::int64_t p) {
  for (;;) {
    std::vector<std::vector<std::int64_t>> m(l, std::vector<std::int64_t>(l));
    for (auto& row : m)
      for (auto& x : row) x = uniform(0, p - 1);
    if (rank_mod_p(m, p) == l) return m;
  }
}

inline KFBasis change_basis(const KFBasis& basis, const std::vector<std::vector<std::int64_t>>& m,
                            std::int64_t k) {
  KFBasis out;
  for (const auto& row : m) {
    FabVector v = scale(0, basis.vectors.front(), k);
    for (std::size_t j = 0; j < row.size(); ++j) v = add(v, scale(row[j], basis.vectors[j], k), k);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace isohom::testing
