#include "weylcomp/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace weylcomp {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= rank() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Perm: images are not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
  return Perm(std::move(v));
}

Perm Perm::simple(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::out_of_range("Perm::simple: index out of range");
  auto v = identity(n).images_;
  std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
  return Perm(std::move(v));
}

Perm Perm::from_one_line(const std::vector<int>& one_line) {
  std::vector<int> v;
  v.reserve(one_line.size());
  for (int x : one_line) v.push_back(x - 1);
  return Perm(std::move(v));
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int v : images_) out.push_back(v + 1);
  return out;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

int Perm::length() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm compose(const Perm& u, const Perm& v) {
  if (u.rank() != v.rank()) throw ShapeError("compose: rank mismatch");
  std::vector<int> out(static_cast<std::size_t>(u.rank()));
  for (int i = 0; i < u.rank(); ++i) out[static_cast<std::size_t>(i)] = u(v(i));
  return Perm(std::move(out));
}

bool bruhat_leq(const Perm& u, const Perm& v) {
  if (u.rank() != v.rank()) throw ShapeError("bruhat_leq: rank mismatch");
  const int n = u.rank();
  std::vector<int> pu, pv;
  for (int k = 0; k < n; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
    for (int i = 0; i <= k; ++i)
      if (pu[static_cast<std::size_t>(i)] > pv[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  auto v = Perm::identity(n).images();
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> left_descents(const Perm& w) {
  const Perm inv = w.inverse();
  std::vector<int> out;
  for (int i = 0; i + 1 < w.rank(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> word;
  Perm cur = w;
  while (!cur.is_identity()) {
    const int i = left_descents(cur).front();
    word.push_back(i);
    cur = compose(Perm::simple(cur.rank(), i), cur);
  }
  return word;
}

// ---------------------------------------------------------------------------

MultiPerm::MultiPerm(Parts parts) : parts_(std::move(parts)) {
  bool first = true;
  for (const auto& [tau, p] : parts_) {
    if (first) {
      rank_ = p.rank();
      first = false;
    } else if (p.rank() != rank_) {
      throw ShapeError("MultiPerm: parts have different ranks");
    }
  }
}

MultiPerm MultiPerm::identity(const std::vector<std::string>& labels, int n) {
  Parts parts;
  for (const auto& tau : labels) parts.emplace(tau, Perm::identity(n));
  return MultiPerm(std::move(parts));
}

MultiPerm MultiPerm::longest(const std::vector<std::string>& labels, int n) {
  Parts parts;
  for (const auto& tau : labels) parts.emplace(tau, Perm::longest(n));
  return MultiPerm(std::move(parts));
}

MultiPerm MultiPerm::simple(const std::vector<std::string>& labels, int n,
                            const std::string& tau, int i) {
  Parts parts;
  for (const auto& t : labels) parts.emplace(t, t == tau ? Perm::simple(n, i) : Perm::identity(n));
  if (!parts.contains(tau)) throw ShapeError("MultiPerm::simple: unknown label " + tau);
  return MultiPerm(std::move(parts));
}

MultiPerm MultiPerm::single(const Perm& p, const std::string& tau) {
  return MultiPerm(Parts{{tau, p}});
}

const Perm& MultiPerm::at(const std::string& tau) const {
  auto it = parts_.find(tau);
  if (it == parts_.end()) throw ShapeError("MultiPerm: unknown label " + tau);
  return it->second;
}

std::vector<std::string> MultiPerm::labels() const {
  std::vector<std::string> out;
  for (const auto& [tau, p] : parts_) out.push_back(tau);
  return out;
}

bool MultiPerm::same_shape(const MultiPerm& other) const {
  if (rank_ != other.rank_ || parts_.size() != other.parts_.size()) return false;
  auto a = parts_.begin();
  auto b = other.parts_.begin();
  for (; a != parts_.end(); ++a, ++b)
    if (a->first != b->first) return false;
  return true;
}

MultiPerm MultiPerm::inverse() const {
  Parts out;
  for (const auto& [tau, p] : parts_) out.emplace(tau, p.inverse());
  return MultiPerm(std::move(out));
}

int MultiPerm::length() const {
  int total = 0;
  for (const auto& [tau, p] : parts_) total += p.length();
  return total;
}

bool MultiPerm::is_identity() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const auto& kv) { return kv.second.is_identity(); });
}

MultiPerm compose(const MultiPerm& u, const MultiPerm& v) {
  if (!u.same_shape(v)) throw ShapeError("compose: rank or embedding set mismatch");
  MultiPerm::Parts out;
  for (const auto& [tau, p] : u.parts()) out.emplace(tau, compose(p, v.at(tau)));
  return MultiPerm(std::move(out));
}

bool bruhat_leq(const MultiPerm& u, const MultiPerm& v) {
  if (!u.same_shape(v)) throw ShapeError("bruhat_leq: rank or embedding set mismatch");
  for (const auto& [tau, p] : u.parts())
    if (!bruhat_leq(p, v.at(tau))) return false;
  return true;
}

std::vector<WordLetter> reduced_word(const MultiPerm& w) {
  std::vector<WordLetter> word;
  auto parts = w.parts();
  for (;;) {
    const std::string* best_tau = nullptr;
    int best_i = -1;
    for (const auto& [tau, p] : parts) {
      auto d = left_descents(p);
      if (!d.empty() && (best_i < 0 || d.front() < best_i)) {
        best_i = d.front();
        best_tau = &tau;
      }
    }
    if (best_i < 0) break;
    Perm& p = parts.at(*best_tau);
    word.push_back({*best_tau, best_i});
    p = compose(Perm::simple(p.rank(), best_i), p);
  }
  return word;
}

MultiPerm word_product(const std::vector<WordLetter>& word,
                       const std::vector<std::string>& labels, int n) {
  MultiPerm out = MultiPerm::identity(labels, n);
  for (const auto& letter : word)
    out = compose(out, MultiPerm::simple(labels, n, letter.tau, letter.index));
  return out;
}

std::vector<MultiPerm> all_multiperms(const std::vector<std::string>& labels, int n) {
  const auto perms = all_perms(n);
  std::vector<MultiPerm::Parts> acc{{}};
  for (const auto& tau : labels) {
    std::vector<MultiPerm::Parts> next;
    next.reserve(acc.size() * perms.size());
    for (const auto& partial : acc)
      for (const auto& p : perms) {
        auto q = partial;
        q.emplace(tau, p);
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  std::vector<MultiPerm> out;
  out.reserve(acc.size());
  for (auto& parts : acc) out.emplace_back(std::move(parts));
  return out;
}

}  // namespace weylcomp
