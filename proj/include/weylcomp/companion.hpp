#pragma once

// Companion characters attached to a refinement: weights, the relative
// position w_R, the upper ideal {w >= w_R}, Jordan-Holder ideals and
// certified saturated walks up to the maximal coset.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylcomp/parabolic.hpp"
#include "weylcomp/roots.hpp"
#include "weylcomp/steinberg.hpp"

namespace weylcomp {

using Rational = boost::multiprecision::cpp_rational;

struct Place {
  std::string label;
  long long q = 0;
  std::vector<std::string> embeddings;
  /// Refinement: the eigenvalue labels phi_1..phi_n in the chosen order.
  std::vector<std::string> eigenvalue_labels;
  /// Exact values of the eigenvalues in the same order, when known.
  std::optional<std::vector<Rational>> eigenvalues;

  friend bool operator==(const Place&, const Place&) = default;
};

class RefinementSpec {
 public:
  RefinementSpec() = default;
  /// Validates q > 0, distinct labels per place, distinct embeddings overall
  /// and matching value counts.
  explicit RefinementSpec(std::vector<Place> places);

  const std::vector<Place>& places() const { return places_; }
  /// Union of all embedding labels, sorted.
  std::vector<std::string> embeddings() const;
  /// n, the common number of eigenvalues per place.
  int rank() const;

  friend bool operator==(const RefinementSpec&, const RefinementSpec&) = default;

 private:
  std::vector<Place> places_;
};

struct CharacterSymbol {
  IntegralWeight algebraic_weight;
  std::vector<std::string> smooth_labels;
  bool twisted = false;

  /// Adds the staircase (0, 1, ..., n-1) to every embedding; throws if already twisted.
  CharacterSymbol twist() const;
  CharacterSymbol untwist() const;

  friend bool operator==(const CharacterSymbol&, const CharacterSymbol&) = default;
};

struct CompanionCertificate {
  CosetRep start;
  std::vector<InductionStep> chain;

  /// Last coset of the walk (start when the chain is empty).
  const CosetRep& end() const { return chain.empty() ? start : chain.back().to; }

  friend bool operator==(const CompanionCertificate&, const CompanionCertificate&) = default;
};

struct HodgeData {
  IntegralWeight lambda;
  ParabolicSpec P;
};

struct CompanionEntry {
  CosetRep w;
  CharacterSymbol delta;

  friend bool operator==(const CompanionEntry&, const CompanionEntry&) = default;
};

/// The weight (0, 1, ..., n-1) on every label.
IntegralWeight staircase(const std::vector<std::string>& labels, int n);

/// lambda_i = h_{n-1-i} + i (0-based) and P = equal runs of h.
/// Throws std::invalid_argument unless every h_tau is weakly increasing.
HodgeData weights_from_hodge(const IntegralWeight& h);

/// Block structure of the equal runs of an antidominant h.
ParabolicSpec parabolic_of(const IntegralWeight& h);

/// The coset wW_P with w(h) = char_weight. Throws std::invalid_argument when
/// the multisets differ.
CosetRep relative_position(const IntegralWeight& char_weight, const IntegralWeight& h);

/// The unique character delta_{R,w}, twisted.
CharacterSymbol companion_character(const RefinementSpec& R, const IntegralWeight& h,
                                    const CosetRep& w);

/// {(w, delta_{R,w}) : w >= w_R}, sorted by (lg_P, rep).
std::vector<CompanionEntry> companion_set(const RefinementSpec& R, const IntegralWeight& h,
                                          const CosetRep& w_R);

/// Lower order ideal {w' <= w} in W/W_P, sorted by (lg_P, rep).
std::vector<CosetRep> jordan_holder_cosets(const CosetRep& w);

/// Saturated chain w_R < ... < w_0 W_P, one certified induction step per cover.
CompanionCertificate certify_walk(const CosetRep& w_R, const IntegralWeight& h);

/// phi_i / phi_j not in {1, q_v} for every place and i != j.
/// Throws std::invalid_argument when some place lacks values or has a zero value.
bool genericity_check(const RefinementSpec& R);

}  // namespace weylcomp
