#pragma once

// Brute-force reference implementations used only by the tests. Each one
// computes from first principles (BFS, subwords, explicit matrices, orbit
// enumeration) rather than through the library's shortcuts.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "weylcomp/parabolic.hpp"
#include "weylcomp/weyl.hpp"

namespace oracle {

using weylcomp::Perm;

inline Perm apply_simple_left(const Perm& w, int i) {
  return weylcomp::compose(Perm::simple(w.rank(), i), w);
}

/// Length as distance from the identity in the Cayley graph of simple reflections.
inline std::map<Perm, int> cayley_lengths(int n) {
  std::map<Perm, int> dist;
  std::queue<Perm> q;
  dist[Perm::identity(n)] = 0;
  q.push(Perm::identity(n));
  while (!q.empty()) {
    const Perm w = q.front();
    q.pop();
    for (int i = 0; i + 1 < n; ++i) {
      const Perm v = apply_simple_left(w, i);
      if (!dist.contains(v)) {
        dist[v] = dist[w] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

/// Some reduced word of v, found by BFS parents.
inline std::vector<int> bfs_reduced_word(const Perm& v) {
  const int n = v.rank();
  std::map<Perm, std::pair<Perm, int>> parent;
  std::queue<Perm> q;
  const Perm e = Perm::identity(n);
  parent.emplace(e, std::make_pair(e, -1));
  q.push(e);
  while (!q.empty() && !parent.contains(v)) {
    const Perm w = q.front();
    q.pop();
    for (int i = 0; i + 1 < n; ++i) {
      const Perm u = weylcomp::compose(w, Perm::simple(n, i));
      if (!parent.contains(u)) {
        parent.emplace(u, std::make_pair(w, i));
        q.push(u);
      }
    }
  }
  std::vector<int> word;
  for (Perm cur = v; cur != e; cur = parent.at(cur).first) word.push_back(parent.at(cur).second);
  std::reverse(word.begin(), word.end());
  return word;
}

/// Subword property: u <= v iff u is the product of a subword of a reduced word of v.
inline bool subword_leq(const Perm& u, const Perm& v) {
  const auto word = bfs_reduced_word(v);
  const int n = v.rank();
  const std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Perm w = Perm::identity(n);
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t{1} << b)) w = weylcomp::compose(w, Perm::simple(n, word[b]));
    if (w == u) return true;
  }
  return false;
}

/// Explicit subgroup W_P of S_n generated by the simple reflections inside blocks.
inline std::vector<Perm> generated_subgroup(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  std::vector<int> gens;
  int start = 0;
  for (int b : blocks) {
    for (int i = start; i + 1 < start + b; ++i) gens.push_back(i);
    start += b;
  }
  std::set<Perm> seen{Perm::identity(n)};
  std::queue<Perm> q;
  q.push(Perm::identity(n));
  while (!q.empty()) {
    const Perm w = q.front();
    q.pop();
    for (int i : gens) {
      const Perm v = weylcomp::compose(w, Perm::simple(n, i));
      if (seen.insert(v).second) q.push(v);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Minimal element of w W_P by scanning the whole coset.
inline Perm min_in_coset(const Perm& w, const std::vector<int>& blocks) {
  Perm best = w;
  for (const auto& x : generated_subgroup(blocks)) {
    const Perm c = weylcomp::compose(w, x);
    if (c.length() < best.length()) best = c;
  }
  return best;
}

/// Minimal element of W_Q w W_P by scanning the whole double coset.
inline Perm min_in_double_coset(const Perm& w, const std::vector<int>& q_blocks, const std::vector<int>& p_blocks) {
  Perm best = w;
  const auto left = generated_subgroup(q_blocks);
  const auto right = generated_subgroup(p_blocks);
  for (const auto& a : left)
    for (const auto& b : right) {
      const Perm c = weylcomp::compose(a, weylcomp::compose(w, b));
      if (c.length() < best.length()) best = c;
    }
  return best;
}

/// [n]_q! = prod_{k=1}^n (1 + q + ... + q^{k-1}).
inline long long q_factorial(int n, long long q) {
  long long r = 1;
  for (int k = 1; k <= n; ++k) {
    long long s = 0, pw = 1;
    for (int e = 0; e < k; ++e, pw *= q) s += pw;
    r *= s;
  }
  return r;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// |GL_n(F_p)| / |B(F_p)|.
inline long long gl_over_borel(int n, long long p) {
  long long gl = 1;
  for (int k = 0; k < n; ++k) gl *= ipow(p, n) - ipow(p, k);
  return gl / (ipow(p - 1, n) * ipow(p, n * (n - 1) / 2));
}

/// Integer permutation matrix with entries (w(j), j) = 1.
inline std::vector<std::vector<int>> perm_matrix(const Perm& w) {
  const int n = w.rank();
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(w(j))][static_cast<std::size_t>(j)] = 1;
  return m;
}

inline std::vector<std::vector<int>> int_mul(const std::vector<std::vector<int>>& a,
                                            const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& a) {
  std::vector<std::vector<int>> r(a.size(), std::vector<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[j][i] = a[i][j];
  return r;
}

/// Position (row, col) of E_ij after Ad(w) = w' E_ij w'^{-1}, by matrix multiplication.
inline std::pair<int, int> conjugate_elementary(const Perm& w, int i, int j) {
  const auto m = perm_matrix(w);
  const int n = w.rank();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  const auto r = int_mul(int_mul(m, e), transpose(m));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0) return {a, b};
  return {-1, -1};
}

inline std::vector<int> block_index(const std::vector<int>& blocks) {
  std::vector<int> out;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (int r = 0; r < blocks[k]; ++r) out.push_back(static_cast<int>(k));
  return out;
}

/// Ad(w) m_P ∩ u ⊂ n_Q, by conjugating elementary matrices.
inline bool levi_cap_by_matrices(const Perm& w, const std::vector<int>& p_blocks, const std::vector<int>& q_blocks) {
  const auto bp = block_index(p_blocks);
  const auto bq = block_index(q_blocks);
  const int n = w.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || bp[static_cast<std::size_t>(i)] != bp[static_cast<std::size_t>(j)]) continue;
      const auto [a, b] = conjugate_elementary(w, i, j);
      if (a < b && bq[static_cast<std::size_t>(a)] == bq[static_cast<std::size_t>(b)]) return false;
    }
  return true;
}

/// (w(x))_i = x_{w^{-1}(i)} computed through the permutation matrix acting on the column x.
inline std::vector<long long> act_by_matrix(const Perm& w, const std::vector<long long>& x) {
  const auto m = perm_matrix(w);
  std::vector<long long> r(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
  return r;
}

/// Upper order ideal {c : c >= w} computed with the subword oracle on minimal reps.
inline std::vector<Perm> upper_ideal(const Perm& w, const std::vector<int>& blocks) {
  std::set<Perm> reps;
  for (const auto& x : weylcomp::all_perms(w.rank())) reps.insert(min_in_coset(x, blocks));
  const Perm base = min_in_coset(w, blocks);
  std::vector<Perm> out;
  for (const auto& r : reps)
    if (subword_leq(base, r)) out.push_back(r);
  return out;
}

}  // namespace oracle
