#include "weylcomp/roots.hpp"

#include <algorithm>
#include <numeric>

namespace weylcomp {

IntegralWeight::IntegralWeight(Coords coords) : coords_(std::move(coords)) {
  bool first = true;
  for (const auto& [tau, v] : coords_) {
    const int n = static_cast<int>(v.size());
    if (first) {
      rank_ = n;
      first = false;
    } else if (n != rank_) {
      throw ShapeError("IntegralWeight: labels have vectors of different lengths");
    }
  }
}

IntegralWeight IntegralWeight::single(std::vector<long long> v, const std::string& tau) {
  return IntegralWeight(Coords{{tau, std::move(v)}});
}

IntegralWeight IntegralWeight::constant(const std::vector<std::string>& labels, int n,
                                        long long c) {
  Coords out;
  for (const auto& tau : labels) out.emplace(tau, std::vector<long long>(static_cast<std::size_t>(n), c));
  return IntegralWeight(std::move(out));
}

const std::vector<long long>& IntegralWeight::at(const std::string& tau) const {
  auto it = coords_.find(tau);
  if (it == coords_.end()) throw ShapeError("IntegralWeight: unknown label " + tau);
  return it->second;
}

std::vector<std::string> IntegralWeight::labels() const {
  std::vector<std::string> out;
  for (const auto& [tau, v] : coords_) out.push_back(tau);
  return out;
}

namespace {

template <typename Op>
IntegralWeight combine(const IntegralWeight& a, const IntegralWeight& b, Op op) {
  if (a.labels() != b.labels() || a.rank() != b.rank())
    throw ShapeError("IntegralWeight: shape mismatch");
  IntegralWeight::Coords out;
  for (const auto& [tau, v] : a.coords()) {
    const auto& w = b.at(tau);
    std::vector<long long> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = op(v[i], w[i]);
    out.emplace(tau, std::move(r));
  }
  return IntegralWeight(std::move(out));
}

void check_shape(const MultiPerm& w, const IntegralWeight& x) {
  if (w.labels() != x.labels() || w.rank() != x.rank())
    throw ShapeError("embedding set or rank mismatch between permutation and weight");
}

}  // namespace

IntegralWeight IntegralWeight::operator+(const IntegralWeight& o) const {
  return combine(*this, o, std::plus<>{});
}

IntegralWeight IntegralWeight::operator-(const IntegralWeight& o) const {
  return combine(*this, o, std::minus<>{});
}

// ---------------------------------------------------------------------------

ParabolicSpec::ParabolicSpec(Blocks blocks) : blocks_(std::move(blocks)) {
  bool first = true;
  for (const auto& [tau, comp] : blocks_) {
    int sum = 0;
    for (int b : comp) {
      if (b <= 0) throw std::invalid_argument("ParabolicSpec: block sizes must be positive");
      sum += b;
    }
    if (first) {
      rank_ = sum;
      first = false;
    } else if (sum != rank_) {
      throw ShapeError("ParabolicSpec: compositions sum to different n");
    }
  }
}

ParabolicSpec ParabolicSpec::single(std::vector<int> blocks, const std::string& tau) {
  return ParabolicSpec(Blocks{{tau, std::move(blocks)}});
}

ParabolicSpec ParabolicSpec::borel(const std::vector<std::string>& labels, int n) {
  Blocks out;
  for (const auto& tau : labels) out.emplace(tau, std::vector<int>(static_cast<std::size_t>(n), 1));
  return ParabolicSpec(std::move(out));
}

ParabolicSpec ParabolicSpec::full(const std::vector<std::string>& labels, int n) {
  Blocks out;
  for (const auto& tau : labels) out.emplace(tau, std::vector<int>{n});
  return ParabolicSpec(std::move(out));
}

ParabolicSpec ParabolicSpec::minimal(const std::vector<std::string>& labels, int n,
                                     const Root& alpha) {
  if (!alpha.simple()) throw std::invalid_argument("ParabolicSpec::minimal: root is not simple");
  Blocks out;
  for (const auto& tau : labels) {
    std::vector<int> comp;
    for (int k = 0; k < n; ++k) {
      if (tau == alpha.tau && k == alpha.i) {
        comp.push_back(2);
        ++k;
      } else {
        comp.push_back(1);
      }
    }
    out.emplace(tau, std::move(comp));
  }
  if (!out.contains(alpha.tau)) throw ShapeError("ParabolicSpec::minimal: unknown label " + alpha.tau);
  return ParabolicSpec(std::move(out));
}

const std::vector<int>& ParabolicSpec::at(const std::string& tau) const {
  auto it = blocks_.find(tau);
  if (it == blocks_.end()) throw ShapeError("ParabolicSpec: unknown label " + tau);
  return it->second;
}

std::vector<std::string> ParabolicSpec::labels() const {
  std::vector<std::string> out;
  for (const auto& [tau, c] : blocks_) out.push_back(tau);
  return out;
}

std::vector<int> ParabolicSpec::block_index(const std::string& tau) const {
  std::vector<int> out;
  int k = 0;
  for (int size : at(tau)) {
    for (int r = 0; r < size; ++r) out.push_back(k);
    ++k;
  }
  return out;
}

bool ParabolicSpec::same_block(const std::string& tau, int i, int j) const {
  const auto idx = block_index(tau);
  return idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(j)];
}

bool ParabolicSpec::is_borel() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) {
    return std::all_of(kv.second.begin(), kv.second.end(), [](int b) { return b == 1; });
  });
}

std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<ParabolicSpec> all_parabolics(const std::vector<std::string>& labels, int n) {
  const auto comps = compositions(n);
  std::vector<ParabolicSpec::Blocks> acc{{}};
  for (const auto& tau : labels) {
    std::vector<ParabolicSpec::Blocks> next;
    for (const auto& partial : acc)
      for (const auto& c : comps) {
        auto q = partial;
        q.emplace(tau, c);
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  std::vector<ParabolicSpec> out;
  for (auto& b : acc) out.emplace_back(std::move(b));
  return out;
}

// ---------------------------------------------------------------------------

long long pairing(const Root& a, const IntegralWeight& x) {
  const auto& v = x.at(a.tau);
  return v.at(static_cast<std::size_t>(a.i)) - v.at(static_cast<std::size_t>(a.j));
}

Root act(const MultiPerm& w, const Root& a) {
  const Perm& p = w.at(a.tau);
  return {a.tau, p(a.i), p(a.j)};
}

IntegralWeight act(const MultiPerm& w, const IntegralWeight& x) {
  check_shape(w, x);
  IntegralWeight::Coords out;
  for (const auto& [tau, v] : x.coords()) {
    const Perm& p = w.at(tau);
    std::vector<long long> r(v.size());
    for (int k = 0; k < p.rank(); ++k) r[static_cast<std::size_t>(p(k))] = v[static_cast<std::size_t>(k)];
    out.emplace(tau, std::move(r));
  }
  return IntegralWeight(std::move(out));
}

IntegralWeight staircase_rho(const std::vector<std::string>& labels, int n) {
  IntegralWeight::Coords out;
  for (const auto& tau : labels) {
    std::vector<long long> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
    out.emplace(tau, std::move(v));
  }
  return IntegralWeight(std::move(out));
}

IntegralWeight dot_act(const MultiPerm& w, const IntegralWeight& lambda) {
  check_shape(w, lambda);
  const auto rho = staircase_rho(lambda.labels(), lambda.rank());
  return act(w, lambda + rho) - rho;
}

std::vector<Root> all_roots(const std::vector<std::string>& labels, int n) {
  std::vector<Root> out;
  for (const auto& tau : labels)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) out.push_back({tau, i, j});
  return out;
}

std::vector<Root> positive_roots(const std::vector<std::string>& labels, int n) {
  std::vector<Root> out;
  for (const auto& tau : labels)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back({tau, i, j});
  return out;
}

std::vector<Root> simple_roots(const std::vector<std::string>& labels, int n) {
  std::vector<Root> out;
  for (const auto& tau : labels)
    for (int i = 0; i + 1 < n; ++i) out.push_back({tau, i, i + 1});
  return out;
}

std::vector<Root> simple_roots(const ParabolicSpec& spec) {
  std::vector<Root> out;
  for (const auto& tau : spec.labels()) {
    const auto idx = spec.block_index(tau);
    for (int i = 0; i + 1 < spec.rank(); ++i)
      if (idx[static_cast<std::size_t>(i)] == idx[static_cast<std::size_t>(i + 1)])
        out.push_back({tau, i, i + 1});
  }
  return out;
}

std::vector<Root> levi_roots(const ParabolicSpec& spec) {
  std::vector<Root> out;
  for (const auto& a : all_roots(spec.labels(), spec.rank()))
    if (in_levi(spec, a)) out.push_back(a);
  return out;
}

bool in_levi(const ParabolicSpec& spec, const Root& a) {
  return spec.same_block(a.tau, a.i, a.j);
}

std::set<Root> inversion_set(const MultiPerm& w, const ParabolicSpec* relative_to) {
  std::set<Root> out;
  for (const auto& a : positive_roots(w.labels(), w.rank())) {
    if (relative_to && in_levi(*relative_to, a)) continue;
    if (!act(w, a).positive()) out.insert(a);
  }
  return out;
}

bool dominance(const IntegralWeight& x, const ParabolicSpec& spec, Dominance mode) {
  for (const auto& a : simple_roots(spec)) {
    const long long v = pairing(a, x);
    switch (mode) {
      case Dominance::dominant:
        if (v < 0) return false;
        break;
      case Dominance::antidominant:
        if (v > 0) return false;
        break;
      case Dominance::strict:
        if (v <= 0) return false;
        break;
    }
  }
  return true;
}

bool p_regular_antidominant(const IntegralWeight& h, const ParabolicSpec& P) {
  if (h.labels() != P.labels() || h.rank() != P.rank()) return false;
  for (const auto& a : simple_roots(h.labels(), h.rank())) {
    const long long v = pairing(a, h);
    if (in_levi(P, a) ? v != 0 : v >= 0) return false;
  }
  return true;
}

IntegralWeight p_regular_witness(const ParabolicSpec& P) {
  return p_regular_witness(P, {1}, 0);
}

IntegralWeight p_regular_witness(const ParabolicSpec& P, const std::vector<long long>& gaps,
                                 long long offset) {
  if (gaps.empty()) throw std::invalid_argument("p_regular_witness: empty gap list");
  for (long long g : gaps)
    if (g <= 0) throw std::invalid_argument("p_regular_witness: gaps must be positive");
  IntegralWeight::Coords out;
  for (const auto& tau : P.labels()) {
    std::vector<long long> v;
    long long value = offset;
    std::size_t k = 0;
    for (int size : P.at(tau)) {
      for (int r = 0; r < size; ++r) v.push_back(value);
      value += gaps[k++ % gaps.size()];
    }
    out.emplace(tau, std::move(v));
  }
  return IntegralWeight(std::move(out));
}

}  // namespace weylcomp
