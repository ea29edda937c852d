#include "weylcomp/companion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylcomp {

RefinementSpec::RefinementSpec(std::vector<Place> places) : places_(std::move(places)) {
  std::set<std::string> seen_places, seen_embeddings;
  std::optional<std::size_t> n;
  for (const auto& v : places_) {
    if (!seen_places.insert(v.label).second)
      throw std::invalid_argument("RefinementSpec: duplicate place label " + v.label);
    if (v.q <= 0) throw std::invalid_argument("RefinementSpec: q must be positive at place " + v.label);
    if (v.embeddings.empty())
      throw std::invalid_argument("RefinementSpec: place " + v.label + " has no embeddings");
    for (const auto& tau : v.embeddings)
      if (!seen_embeddings.insert(tau).second)
        throw std::invalid_argument("RefinementSpec: embedding " + tau + " listed twice");
    std::set<std::string> labels(v.eigenvalue_labels.begin(), v.eigenvalue_labels.end());
    if (labels.size() != v.eigenvalue_labels.size())
      throw std::invalid_argument("RefinementSpec: eigenvalue labels repeat at place " + v.label);
    if (n && *n != v.eigenvalue_labels.size())
      throw ShapeError("RefinementSpec: places have different numbers of eigenvalues");
    n = v.eigenvalue_labels.size();
    if (v.eigenvalues && v.eigenvalues->size() != v.eigenvalue_labels.size())
      throw ShapeError("RefinementSpec: eigenvalue count differs from label count at place " + v.label);
  }
}

std::vector<std::string> RefinementSpec::embeddings() const {
  std::vector<std::string> out;
  for (const auto& v : places_) out.insert(out.end(), v.embeddings.begin(), v.embeddings.end());
  std::sort(out.begin(), out.end());
  return out;
}

int RefinementSpec::rank() const {
  return places_.empty() ? 0 : static_cast<int>(places_.front().eigenvalue_labels.size());
}

// ---------------------------------------------------------------------------

IntegralWeight staircase(const std::vector<std::string>& labels, int n) {
  IntegralWeight::Coords out;
  for (const auto& tau : labels) {
    std::vector<long long> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    out.emplace(tau, std::move(v));
  }
  return IntegralWeight(std::move(out));
}

CharacterSymbol CharacterSymbol::twist() const {
  if (twisted) throw std::logic_error("CharacterSymbol: already twisted");
  const auto& x = algebraic_weight;
  return {x + staircase(x.labels(), x.rank()), smooth_labels, true};
}

CharacterSymbol CharacterSymbol::untwist() const {
  if (!twisted) throw std::logic_error("CharacterSymbol: not twisted");
  const auto& x = algebraic_weight;
  return {x - staircase(x.labels(), x.rank()), smooth_labels, false};
}

namespace {

void require_antidominant(const IntegralWeight& h) {
  for (const auto& [tau, v] : h.coords())
    if (!std::is_sorted(v.begin(), v.end()))
      throw std::invalid_argument("hodge weights for " + tau + " are not weakly increasing");
}

}  // namespace

ParabolicSpec parabolic_of(const IntegralWeight& h) {
  require_antidominant(h);
  ParabolicSpec::Blocks blocks;
  for (const auto& [tau, v] : h.coords()) {
    std::vector<int> comp;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && v[i] == v[i - 1])
        ++comp.back();
      else
        comp.push_back(1);
    }
    blocks.emplace(tau, std::move(comp));
  }
  return ParabolicSpec(std::move(blocks));
}

HodgeData weights_from_hodge(const IntegralWeight& h) {
  ParabolicSpec P = parabolic_of(h);
  IntegralWeight::Coords lambda;
  for (const auto& [tau, v] : h.coords()) {
    const std::size_t n = v.size();
    std::vector<long long> l(n);
    for (std::size_t i = 0; i < n; ++i) l[i] = v[n - 1 - i] + static_cast<long long>(i);
    lambda.emplace(tau, std::move(l));
  }
  return {IntegralWeight(std::move(lambda)), std::move(P)};
}

CosetRep relative_position(const IntegralWeight& char_weight, const IntegralWeight& h) {
  const ParabolicSpec P = parabolic_of(h);
  if (char_weight.labels() != h.labels() || char_weight.rank() != h.rank())
    throw ShapeError("relative_position: weight shapes differ");
  MultiPerm::Parts parts;
  for (const auto& [tau, hv] : h.coords()) {
    const auto& c = char_weight.at(tau);
    std::vector<bool> used(c.size(), false);
    std::vector<int> images;
    // w(h)_{w(k)} = h_k; send k to the earliest unused slot of equal value.
    for (long long value : hv) {
      std::size_t slot = 0;
      while (slot < c.size() && (used[slot] || c[slot] != value)) ++slot;
      if (slot == c.size())
        throw std::invalid_argument("relative_position: weight for " + tau +
                                    " is not a rearrangement of h");
      used[slot] = true;
      images.push_back(static_cast<int>(slot));
    }
    parts.emplace(tau, Perm(std::move(images)));
  }
  return CosetRep(MultiPerm(std::move(parts)), P);
}

CharacterSymbol companion_character(const RefinementSpec& R, const IntegralWeight& h,
                                    const CosetRep& w) {
  std::vector<std::string> labels;
  for (const auto& v : R.places())
    labels.insert(labels.end(), v.eigenvalue_labels.begin(), v.eigenvalue_labels.end());
  return CharacterSymbol{act(w.rep(), h), std::move(labels), false}.twist();
}

namespace {

std::vector<CosetRep> sorted_cosets_where(const ParabolicSpec& P, auto keep) {
  std::vector<CosetRep> out;
  for (const auto& w : all_cosets(P))
    if (keep(w)) out.push_back(w);
  return out;
}

}  // namespace

std::vector<CompanionEntry> companion_set(const RefinementSpec& R, const IntegralWeight& h,
                                          const CosetRep& w_R) {
  if (R.embeddings() != h.labels())
    throw ShapeError("companion_set: refinement embeddings differ from weight labels");
  if (R.rank() != h.rank()) throw ShapeError("companion_set: refinement rank differs from weight rank");
  if (parabolic_of(h) != w_R.spec())
    throw std::invalid_argument("companion_set: w_R is not a coset of the parabolic of h");
  std::vector<CompanionEntry> out;
  for (const auto& w : sorted_cosets_where(w_R.spec(), [&](const CosetRep& c) { return quotient_leq(w_R, c); }))
    out.push_back({w, companion_character(R, h, w)});
  return out;
}

std::vector<CosetRep> jordan_holder_cosets(const CosetRep& w) {
  return sorted_cosets_where(w.spec(), [&](const CosetRep& c) { return quotient_leq(c, w); });
}

CompanionCertificate certify_walk(const CosetRep& w_R, const IntegralWeight& h) {
  CompanionCertificate cert{w_R, {}};
  CosetRep cur = w_R;
  while (!is_maximal_coset(cur)) {
    auto step = find_induction_step(cur, h);
    cur = step.to;
    cert.chain.push_back(std::move(step));
  }
  return cert;
}

bool genericity_check(const RefinementSpec& R) {
  for (const auto& v : R.places()) {
    if (!v.eigenvalues)
      throw std::invalid_argument("genericity_check: place " + v.label + " has no eigenvalue values");
    const auto& phi = *v.eigenvalues;
    for (const auto& x : phi)
      if (x == 0) throw std::invalid_argument("genericity_check: zero eigenvalue at place " + v.label);
    const Rational q(v.q);
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < phi.size(); ++j) {
        if (i == j) continue;
        const Rational ratio = phi[i] / phi[j];
        if (ratio == 1 || ratio == q) return false;
      }
  }
  return true;
}

}  // namespace weylcomp
