#pragma once

// Component criteria for generalized Steinberg varieties Z_{Q,P}, realized
// as root-set computations, and the induction step that climbs W/W_P.

#include <optional>
#include <set>
#include <vector>

#include "weylcomp/parabolic.hpp"
#include "weylcomp/roots.hpp"

namespace weylcomp {

/// A sum of root spaces inside gl_n^Sigma, optionally plus the Cartan.
struct RootSpaceSet {
  std::set<Root> roots;
  bool includes_torus = false;

  static RootSpaceSet nilradical_b(const std::vector<std::string>& labels, int n);  // u
  static RootSpaceSet nilradical(const ParabolicSpec& Q);                           // n_Q
  static RootSpaceSet levi(const ParabolicSpec& P);                                 // m_P
  static RootSpaceSet levi_cap_u(const ParabolicSpec& P);                           // m_P ∩ u

  /// Ad(w) applied to every root space.
  RootSpaceSet conjugated(const MultiPerm& w) const;
  RootSpaceSet intersect(const RootSpaceSet& other) const;
  bool subset_of(const RootSpaceSet& other) const;
  std::size_t dimension(int torus_dim) const;

  friend bool operator==(const RootSpaceSet&, const RootSpaceSet&) = default;
};

/// Ad(w) m_P ∩ u ⊂ n_Q.
bool levi_cap_u_in_nQ(const MultiPerm& w, const ParabolicSpec& P, const ParabolicSpec& Q);

/// dim(u ∩ Ad(w) m_P) - dim(n_Q ∩ Ad(w) m_P); Z_{Q,P,w} has dimension
/// (dim G - dim T) minus this defect.
int z_dimension_defect(const MultiPerm& w, const ParabolicSpec& P, const ParabolicSpec& Q);

/// Z_{P,w} ⊂ Z_{Q,P}, decided by strict Q-dominance of w(h).
/// Throws std::invalid_argument unless h is P-regular antidominant.
bool component_in_ZQP(const CosetRep& w, const ParabolicSpec& Q, const IntegralWeight& h);

/// The same inclusion decided on the root side: with w_1 the shortest element
/// of W_Q w W_P, require Ad(w_1) m_P ∩ u ⊂ n_Q and wW_P = w_{Q,0} w_1 W_P.
bool component_in_ZQP_by_roots(const CosetRep& w, const ParabolicSpec& Q);

struct InductionStep {
  Root alpha;
  ParabolicSpec Q;
  CosetRep from;
  CosetRep to;

  friend bool operator==(const InductionStep&, const InductionStep&) = default;
};

/// Smallest simple alpha (then smallest label) in w(R^+ \ R_P^+), with Q = B(alpha).
/// Throws std::domain_error when w is the maximal coset.
InductionStep find_induction_step(const CosetRep& w, const IntegralWeight& h);

/// Every (alpha, Q) over all standard parabolics Q with s_alpha w > w covering in
/// W/W_P, Z_{P,w} not in Z_{Q,P} and Z_{P,s_alpha w} in Z_{Q,P}.
std::vector<InductionStep> all_induction_steps(const CosetRep& w, const IntegralWeight& h);

/// Membership predicate for components through a nu = 0 point in cell w_x: w >= w_x.
bool components_through_point(const CosetRep& w_x, const CosetRep& w);

bool is_maximal_coset(const CosetRep& w);

}  // namespace weylcomp
