#pragma once

// Cosets W/W_P and W_Q\W, minimal representatives and the quotient Bruhat order.
//
// Right multiplication by W_P permutes positions inside a block, so the
// minimal representative of wW_P is w with its values sorted increasingly
// inside each block of positions. Left multiplication by W_Q permutes values
// inside a block of values.

#include <set>
#include <vector>

#include "weylcomp/roots.hpp"
#include "weylcomp/weyl.hpp"

namespace weylcomp {

/// A coset wW_P stored as its minimal-length representative.
class CosetRep {
 public:
  /// Normalizes w to the minimal representative of wW_P.
  CosetRep(const MultiPerm& w, ParabolicSpec spec);

  const MultiPerm& rep() const { return rep_; }
  const ParabolicSpec& spec() const { return spec_; }
  /// lg_P of the coset.
  int length() const { return rep_.length(); }

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend auto operator<=>(const CosetRep&, const CosetRep&) = default;

 private:
  MultiPerm rep_;
  ParabolicSpec spec_;
};

void check_shape(const MultiPerm& w, const ParabolicSpec& P);

MultiPerm min_coset_rep(const MultiPerm& w, const ParabolicSpec& P);
MultiPerm max_coset_rep(const MultiPerm& w, const ParabolicSpec& P);
/// Minimal representative of W_Q w (values sorted by position inside Q-blocks).
MultiPerm min_left_coset_rep(const MultiPerm& w, const ParabolicSpec& Q);

bool in_parabolic(const MultiPerm& w, const ParabolicSpec& P);
/// w in W^P.
bool is_min_rep(const MultiPerm& w, const ParabolicSpec& P);
/// w in ^QW.
bool is_left_min_rep(const MultiPerm& w, const ParabolicSpec& Q);

/// w_{P,0}: reversal inside every block.
MultiPerm longest_in_parabolic(const ParabolicSpec& P);
/// Longest element of W.
MultiPerm longest_element(const ParabolicSpec& P);

std::vector<MultiPerm> parabolic_subgroup(const ParabolicSpec& P);
/// W^P, sorted by (length, one-line).
std::vector<MultiPerm> min_coset_reps(const ParabolicSpec& P);
/// All cosets W/W_P, sorted by (lg_P, one-line of the representative).
std::vector<CosetRep> all_cosets(const ParabolicSpec& P);

struct Decomposition {
  MultiPerm min_part;    // w^P
  MultiPerm levi_part;   // w_P
};

/// w = w^P w_P with w^P in W^P and w_P in W_P.
Decomposition decompose(const MultiPerm& w, const ParabolicSpec& P);

int lg_P(const MultiPerm& w, const ParabolicSpec& P);

bool quotient_leq(const CosetRep& u, const CosetRep& v);

struct LengthSplit {
  int within = 0;  // n_I
  int across = 0;  // n^I
  friend bool operator==(const LengthSplit&, const LengthSplit&) = default;
};

LengthSplit length_split_stats(const Perm& sigma, const std::vector<int>& composition);

/// Unique minimal element of W_Q w W_P.
MultiPerm shortest_double_coset_rep(const MultiPerm& w, const ParabolicSpec& Q,
                                    const ParabolicSpec& P);
/// Exhaustive search over W_Q w W_P.
MultiPerm shortest_double_coset_rep_exhaustive(const MultiPerm& w, const ParabolicSpec& Q,
                                               const ParabolicSpec& P);
/// Alternating P-column / Q-row sorting until stable.
MultiPerm shortest_double_coset_rep_normalized(const MultiPerm& w, const ParabolicSpec& Q,
                                               const ParabolicSpec& P);

/// Total order used for deterministic output: (length, one-line by label).
bool output_order_less(const MultiPerm& a, const MultiPerm& b);

}  // namespace weylcomp
