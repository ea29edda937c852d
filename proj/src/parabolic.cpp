#include "weylcomp/parabolic.hpp"

#include <algorithm>

namespace weylcomp {

namespace {

constexpr int kExhaustiveDoubleCosetMaxRank = 6;

// Sort the values of p inside each block of positions.
Perm sort_positions(const Perm& p, const std::vector<int>& blocks, bool descending) {
  auto v = p.images();
  std::size_t start = 0;
  for (int size : blocks) {
    auto first = v.begin() + static_cast<std::ptrdiff_t>(start);
    auto last = first + size;
    if (descending)
      std::sort(first, last, std::greater<>{});
    else
      std::sort(first, last);
    start += static_cast<std::size_t>(size);
  }
  return Perm(std::move(v));
}

// Minimal element of W_Q p: inside each block of values, reassign the values
// so they increase with position.
Perm sort_values(const Perm& p, const std::vector<int>& blocks) {
  return sort_positions(p.inverse(), blocks, false).inverse();
}

template <typename F>
MultiPerm map_parts(const MultiPerm& w, F f) {
  MultiPerm::Parts out;
  for (const auto& [tau, p] : w.parts()) out.emplace(tau, f(tau, p));
  return MultiPerm(std::move(out));
}

std::vector<Perm> block_group(const std::vector<int>& blocks) {
  std::vector<Perm> acc{Perm::identity(0)};
  int n = 0;
  for (int size : blocks) {
    const auto local = all_perms(size);
    std::vector<Perm> next;
    for (const auto& a : acc)
      for (const auto& b : local) {
        auto v = a.images();
        for (int k = 0; k < size; ++k) v.push_back(n + b(k));
        next.emplace_back(std::move(v));
      }
    acc = std::move(next);
    n += size;
  }
  return acc;
}

}  // namespace

void check_shape(const MultiPerm& w, const ParabolicSpec& P) {
  if (w.labels() != P.labels() || w.rank() != P.rank())
    throw ShapeError("embedding set or rank mismatch between permutation and parabolic");
}

CosetRep::CosetRep(const MultiPerm& w, ParabolicSpec spec)
    : rep_(min_coset_rep(w, spec)), spec_(std::move(spec)) {}

MultiPerm min_coset_rep(const MultiPerm& w, const ParabolicSpec& P) {
  check_shape(w, P);
  return map_parts(w, [&](const std::string& tau, const Perm& p) {
    return sort_positions(p, P.at(tau), false);
  });
}

MultiPerm max_coset_rep(const MultiPerm& w, const ParabolicSpec& P) {
  check_shape(w, P);
  return map_parts(w, [&](const std::string& tau, const Perm& p) {
    return sort_positions(p, P.at(tau), true);
  });
}

MultiPerm min_left_coset_rep(const MultiPerm& w, const ParabolicSpec& Q) {
  check_shape(w, Q);
  return map_parts(w, [&](const std::string& tau, const Perm& p) {
    return sort_values(p, Q.at(tau));
  });
}

bool in_parabolic(const MultiPerm& w, const ParabolicSpec& P) {
  check_shape(w, P);
  for (const auto& [tau, p] : w.parts()) {
    const auto idx = P.block_index(tau);
    for (int i = 0; i < p.rank(); ++i)
      if (idx[static_cast<std::size_t>(i)] != idx[static_cast<std::size_t>(p(i))]) return false;
  }
  return true;
}

bool is_min_rep(const MultiPerm& w, const ParabolicSpec& P) {
  return min_coset_rep(w, P) == w;
}

bool is_left_min_rep(const MultiPerm& w, const ParabolicSpec& Q) {
  return min_left_coset_rep(w, Q) == w;
}

MultiPerm longest_in_parabolic(const ParabolicSpec& P) {
  return max_coset_rep(MultiPerm::identity(P.labels(), P.rank()), P);
}

MultiPerm longest_element(const ParabolicSpec& P) {
  return MultiPerm::longest(P.labels(), P.rank());
}

std::vector<MultiPerm> parabolic_subgroup(const ParabolicSpec& P) {
  std::vector<MultiPerm::Parts> acc{{}};
  for (const auto& [tau, blocks] : P.blocks()) {
    const auto group = block_group(blocks);
    std::vector<MultiPerm::Parts> next;
    for (const auto& partial : acc)
      for (const auto& g : group) {
        auto q = partial;
        q.emplace(tau, g);
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  std::vector<MultiPerm> out;
  for (auto& parts : acc) out.emplace_back(std::move(parts));
  return out;
}

bool output_order_less(const MultiPerm& a, const MultiPerm& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

std::vector<MultiPerm> min_coset_reps(const ParabolicSpec& P) {
  std::vector<MultiPerm> out;
  for (const auto& w : all_multiperms(P.labels(), P.rank()))
    if (is_min_rep(w, P)) out.push_back(w);
  std::sort(out.begin(), out.end(), output_order_less);
  return out;
}

std::vector<CosetRep> all_cosets(const ParabolicSpec& P) {
  std::vector<CosetRep> out;
  for (const auto& w : min_coset_reps(P)) out.emplace_back(w, P);
  return out;
}

Decomposition decompose(const MultiPerm& w, const ParabolicSpec& P) {
  MultiPerm min_part = min_coset_rep(w, P);
  MultiPerm levi_part = compose(min_part.inverse(), w);
  return {std::move(min_part), std::move(levi_part)};
}

int lg_P(const MultiPerm& w, const ParabolicSpec& P) { return min_coset_rep(w, P).length(); }

bool quotient_leq(const CosetRep& u, const CosetRep& v) {
  if (u.spec() != v.spec()) throw ShapeError("quotient_leq: cosets of different parabolics");
  return bruhat_leq(u.rep(), v.rep());
}

LengthSplit length_split_stats(const Perm& sigma, const std::vector<int>& composition) {
  const auto spec = ParabolicSpec::single(composition);
  if (spec.rank() != sigma.rank()) throw ShapeError("length_split_stats: composition does not sum to n");
  const auto idx = spec.block_index("t");
  LengthSplit out;
  for (int m = 0; m < sigma.rank(); ++m)
    for (int k = m + 1; k < sigma.rank(); ++k)
      if (sigma(m) > sigma(k)) {
        if (idx[static_cast<std::size_t>(m)] == idx[static_cast<std::size_t>(k)])
          ++out.within;
        else
          ++out.across;
      }
  return out;
}

MultiPerm shortest_double_coset_rep_exhaustive(const MultiPerm& w, const ParabolicSpec& Q,
                                               const ParabolicSpec& P) {
  check_shape(w, Q);
  check_shape(w, P);
  return map_parts(w, [&](const std::string& tau, const Perm& p) {
    const auto left = block_group(Q.at(tau));
    const auto right = block_group(P.at(tau));
    Perm best = p;
    int best_len = p.length();
    bool unique = true;
    for (const auto& a : left)
      for (const auto& b : right) {
        Perm c = compose(a, compose(p, b));
        const int l = c.length();
        if (l < best_len) {
          best = c;
          best_len = l;
          unique = true;
        } else if (l == best_len && c != best) {
          unique = false;
        }
      }
    if (!unique) throw std::logic_error("double coset has no unique minimal element");
    return best;
  });
}

MultiPerm shortest_double_coset_rep_normalized(const MultiPerm& w, const ParabolicSpec& Q,
                                               const ParabolicSpec& P) {
  check_shape(w, Q);
  check_shape(w, P);
  return map_parts(w, [&](const std::string& tau, const Perm& p) {
    Perm cur = p;
    for (;;) {
      Perm next = sort_values(sort_positions(cur, P.at(tau), false), Q.at(tau));
      if (next == cur) return cur;
      cur = std::move(next);
    }
  });
}

MultiPerm shortest_double_coset_rep(const MultiPerm& w, const ParabolicSpec& Q,
                                    const ParabolicSpec& P) {
  if (w.rank() <= kExhaustiveDoubleCosetMaxRank) return shortest_double_coset_rep_exhaustive(w, Q, P);
  return shortest_double_coset_rep_normalized(w, Q, P);
}

}  // namespace weylcomp
