#include "weylcomp/steinberg.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcomp {

RootSpaceSet RootSpaceSet::nilradical_b(const std::vector<std::string>& labels, int n) {
  RootSpaceSet out;
  for (const auto& a : positive_roots(labels, n)) out.roots.insert(a);
  return out;
}

RootSpaceSet RootSpaceSet::nilradical(const ParabolicSpec& Q) {
  RootSpaceSet out;
  for (const auto& a : positive_roots(Q.labels(), Q.rank()))
    if (!in_levi(Q, a)) out.roots.insert(a);
  return out;
}

RootSpaceSet RootSpaceSet::levi(const ParabolicSpec& P) {
  RootSpaceSet out;
  for (const auto& a : levi_roots(P)) out.roots.insert(a);
  out.includes_torus = true;
  return out;
}

RootSpaceSet RootSpaceSet::levi_cap_u(const ParabolicSpec& P) {
  RootSpaceSet out;
  for (const auto& a : levi_roots(P))
    if (a.positive()) out.roots.insert(a);
  return out;
}

RootSpaceSet RootSpaceSet::conjugated(const MultiPerm& w) const {
  RootSpaceSet out;
  out.includes_torus = includes_torus;
  for (const auto& a : roots) out.roots.insert(act(w, a));
  return out;
}

RootSpaceSet RootSpaceSet::intersect(const RootSpaceSet& other) const {
  RootSpaceSet out;
  out.includes_torus = includes_torus && other.includes_torus;
  std::set_intersection(roots.begin(), roots.end(), other.roots.begin(), other.roots.end(),
                        std::inserter(out.roots, out.roots.end()));
  return out;
}

bool RootSpaceSet::subset_of(const RootSpaceSet& other) const {
  if (includes_torus && !other.includes_torus) return false;
  return std::includes(other.roots.begin(), other.roots.end(), roots.begin(), roots.end());
}

std::size_t RootSpaceSet::dimension(int torus_dim) const {
  return roots.size() + (includes_torus ? static_cast<std::size_t>(torus_dim) : 0U);
}

// ---------------------------------------------------------------------------

namespace {

RootSpaceSet conjugated_levi_cap_u(const MultiPerm& w, const ParabolicSpec& P) {
  const auto u = RootSpaceSet::nilradical_b(P.labels(), P.rank());
  return RootSpaceSet::levi(P).conjugated(w).intersect(u);
}

void require_regular(const IntegralWeight& h, const ParabolicSpec& P) {
  if (!p_regular_antidominant(h, P))
    throw std::invalid_argument("coweight is not P-regular antidominant for the coset's parabolic");
}

}  // namespace

bool levi_cap_u_in_nQ(const MultiPerm& w, const ParabolicSpec& P, const ParabolicSpec& Q) {
  check_shape(w, P);
  check_shape(w, Q);
  return conjugated_levi_cap_u(w, P).subset_of(RootSpaceSet::nilradical(Q));
}

int z_dimension_defect(const MultiPerm& w, const ParabolicSpec& P, const ParabolicSpec& Q) {
  check_shape(w, P);
  check_shape(w, Q);
  const auto m = RootSpaceSet::levi(P).conjugated(w);
  const auto in_u = m.intersect(RootSpaceSet::nilradical_b(P.labels(), P.rank()));
  const auto in_nq = m.intersect(RootSpaceSet::nilradical(Q));
  return static_cast<int>(in_u.roots.size()) - static_cast<int>(in_nq.roots.size());
}

bool component_in_ZQP(const CosetRep& w, const ParabolicSpec& Q, const IntegralWeight& h) {
  require_regular(h, w.spec());
  check_shape(w.rep(), Q);
  return dominance(act(w.rep(), h), Q, Dominance::strict);
}

bool component_in_ZQP_by_roots(const CosetRep& w, const ParabolicSpec& Q) {
  const ParabolicSpec& P = w.spec();
  const MultiPerm w1 = shortest_double_coset_rep(w.rep(), Q, P);
  if (!levi_cap_u_in_nQ(w1, P, Q)) return false;
  return CosetRep(compose(longest_in_parabolic(Q), w1), P) == w;
}

bool is_maximal_coset(const CosetRep& w) {
  return w == CosetRep(longest_element(w.spec()), w.spec());
}

InductionStep find_induction_step(const CosetRep& w, const IntegralWeight& h) {
  const ParabolicSpec& P = w.spec();
  require_regular(h, P);
  if (is_maximal_coset(w)) throw std::domain_error("find_induction_step: coset is already maximal");
  const auto labels = P.labels();
  const int n = P.rank();
  // Candidates in order of smallest index, then smallest label.
  std::vector<Root> simple = simple_roots(labels, n);
  std::stable_sort(simple.begin(), simple.end(),
                   [](const Root& a, const Root& b) { return a.i < b.i; });
  for (const auto& alpha : simple) {
    if (pairing(alpha, act(w.rep(), h)) >= 0) continue;  // alpha in w(R^+ \ R_P^+)
    const auto s = MultiPerm::simple(labels, n, alpha.tau, alpha.i);
    return {alpha, ParabolicSpec::minimal(labels, n, alpha), w,
            CosetRep(compose(s, w.rep()), P)};
  }
  throw std::logic_error("find_induction_step: no simple root found for a non-maximal coset");
}

std::vector<InductionStep> all_induction_steps(const CosetRep& w, const IntegralWeight& h) {
  const ParabolicSpec& P = w.spec();
  require_regular(h, P);
  const auto labels = P.labels();
  const int n = P.rank();
  std::vector<InductionStep> out;
  const auto parabolics = all_parabolics(labels, n);
  std::vector<Root> simple = simple_roots(labels, n);
  std::stable_sort(simple.begin(), simple.end(),
                   [](const Root& a, const Root& b) { return a.i < b.i; });
  for (const auto& alpha : simple) {
    const auto s = MultiPerm::simple(labels, n, alpha.tau, alpha.i);
    CosetRep to(compose(s, w.rep()), P);
    if (to.length() != w.length() + 1) continue;
    for (const auto& Q : parabolics) {
      if (component_in_ZQP(w, Q, h)) continue;
      if (!component_in_ZQP(to, Q, h)) continue;
      out.push_back({alpha, Q, w, to});
    }
  }
  return out;
}

bool components_through_point(const CosetRep& w_x, const CosetRep& w) {
  return quotient_leq(w_x, w);
}

}  // namespace weylcomp
