#pragma once

// Naive reference implementations used as independent oracles. They work on
// plain boolean matrices and exhaustive function enumeration and share no
// code with the library's bitmask and backtracking routes.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "poswfs/types.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Table = std::vector<unsigned>;

inline Matrix matrix_of(const poswfs::Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (unsigned a = 0; a < p.size(); ++a)
    for (unsigned b = 0; b < p.size(); ++b) m[a][b] = p.leq(a, b);
  return m;
}

inline bool is_partial_order(const Matrix& m) {
  const auto n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!m[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && m[a][b] && m[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (m[a][b] && m[b][c] && !m[a][c]) return false;
    }
  }
  return true;
}

/// Calls visit on every function {0..n-1} -> {0..k-1}.
inline void for_each_function(std::size_t n, std::size_t k,
                              const std::function<void(const Table&)>& visit) {
  if (k == 0) return;
  Table t(n, 0);
  while (true) {
    visit(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == k) t[i++] = 0;
    if (i == n) return;
  }
}

inline bool same_up_to_relabel(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<unsigned> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i)
      for (std::size_t j = 0; ok && j < a.size(); ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Partial orders on n points up to isomorphism, from all n x n matrices.
inline std::size_t count_posets(std::size_t n) {
  std::vector<Matrix> reps;
  const std::size_t cells = n * n;
  for (unsigned long bits = 0; bits < (1UL << cells); ++bits) {
    Matrix m(n, std::vector<bool>(n));
    for (std::size_t c = 0; c < cells; ++c) m[c / n][c % n] = (bits >> c) & 1U;
    if (!is_partial_order(m)) continue;
    bool fresh = true;
    for (const auto& r : reps)
      if (same_up_to_relabel(m, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(m));
  }
  return reps.size();
}

inline std::vector<unsigned> members(unsigned long mask, std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < n; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

inline std::set<unsigned> upper(const Matrix& m, const std::set<unsigned>& a) {
  std::set<unsigned> out;
  for (unsigned x = 0; x < m.size(); ++x)
    if (std::all_of(a.begin(), a.end(), [&](unsigned y) { return m[y][x]; })) out.insert(x);
  return out;
}

inline std::set<unsigned> lower(const Matrix& m, const std::set<unsigned>& a) {
  std::set<unsigned> out;
  for (unsigned x = 0; x < m.size(); ++x)
    if (std::all_of(a.begin(), a.end(), [&](unsigned y) { return m[x][y]; })) out.insert(x);
  return out;
}

/// All LU-closed subsets, as sets.
inline std::vector<std::set<unsigned>> lu_closed(const Matrix& m) {
  std::vector<std::set<unsigned>> out;
  for (unsigned long mask = 0; mask < (1UL << m.size()); ++mask) {
    auto v = members(mask, m.size());
    std::set<unsigned> a(v.begin(), v.end());
    if (lower(m, upper(m, a)) == a) out.push_back(a);
  }
  return out;
}

/// Every subset has a least upper and greatest lower bound.
inline bool complete(const Matrix& m) {
  for (unsigned long mask = 0; mask < (1UL << m.size()); ++mask) {
    auto v = members(mask, m.size());
    std::set<unsigned> a(v.begin(), v.end());
    auto u = upper(m, a);
    auto l = lower(m, a);
    auto least = [&](const std::set<unsigned>& s) {
      return std::any_of(s.begin(), s.end(), [&](unsigned x) {
        return std::all_of(s.begin(), s.end(), [&](unsigned y) { return m[x][y]; });
      });
    };
    auto greatest = [&](const std::set<unsigned>& s) {
      return std::any_of(s.begin(), s.end(), [&](unsigned x) {
        return std::all_of(s.begin(), s.end(), [&](unsigned y) { return m[y][x]; });
      });
    };
    if (!least(u) || !greatest(l)) return false;
  }
  return true;
}

inline bool monotone(const Matrix& dom, const Matrix& cod, const Table& t) {
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (dom[a][b] && !cod[t[a]][t[b]]) return false;
  return true;
}

inline bool equivariant(const poswfs::SPoset& a, const poswfs::SPoset& b, const Table& t) {
  for (unsigned x = 0; x < a.size(); ++x)
    for (unsigned s = 0; s < a.over().size(); ++s)
      if (t[a.act(x, s)] != b.act(t[x], s)) return false;
  return true;
}

/// All S-poset map tables A -> B by exhaustive enumeration.
inline std::vector<Table> homs(const poswfs::SPoset& a, const poswfs::SPoset& b) {
  std::vector<Table> out;
  const Matrix ma = matrix_of(a.carrier()), mb = matrix_of(b.carrier());
  for_each_function(a.size(), b.size(), [&](const Table& t) {
    if (monotone(ma, mb, t) && equivariant(a, b, t)) out.push_back(t);
  });
  return out;
}

/// Diagonals d: B -> C with d l = u and r d = v, by exhaustive enumeration.
inline std::size_t count_diagonals(const poswfs::SPosetMap& l, const poswfs::SPosetMap& r,
                                   const Table& u, const Table& v) {
  std::size_t count = 0;
  for (const auto& d : homs(*l.cod, *r.dom)) {
    bool ok = true;
    for (unsigned a = 0; ok && a < l.dom->size(); ++a) ok = d[l(a)] == u[a];
    for (unsigned b = 0; ok && b < l.cod->size(); ++b) ok = r(d[b]) == v[b];
    if (ok) ++count;
  }
  return count;
}

/// Every commutative square on (l, r) has a diagonal.
inline bool lifts(const poswfs::SPosetMap& l, const poswfs::SPosetMap& r) {
  for (const auto& u : homs(*l.dom, *r.dom))
    for (const auto& v : homs(*l.cod, *r.cod)) {
      bool commutes = true;
      for (unsigned a = 0; commutes && a < l.dom->size(); ++a) commutes = r(u[a]) == v[l(a)];
      if (commutes && count_diagonals(l, r, u, v) == 0) return false;
    }
  return true;
}

}  // namespace oracle
