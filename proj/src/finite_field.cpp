#include "weylcomp/finite_field.hpp"

#include <stdexcept>
#include <utility>

namespace weylcomp {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

int reduce(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

int inverse_mod(long long a, int p) {
  const int x = reduce(a, p);
  if (x == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  // Extended Euclid on (x, p).
  long long r0 = p, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return reduce(t0, p);
}

ModP::ModP(long long value, int p) : p_(p), v_(reduce(value, p)) {}

ModP ModP::operator+(const ModP& o) const { return {v_ + o.v_, p_}; }
ModP ModP::operator-(const ModP& o) const { return {v_ - o.v_, p_}; }
ModP ModP::operator*(const ModP& o) const { return {static_cast<long long>(v_) * o.v_, p_}; }
ModP ModP::operator/(const ModP& o) const {
  return {static_cast<long long>(v_) * inverse_mod(o.v_, p_), p_};
}
ModP ModP::operator-() const { return {-v_, p_}; }

// ---------------------------------------------------------------------------

FqMatrix::FqMatrix(int n, int p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw std::invalid_argument("FqMatrix: negative size");
  if (!is_prime(p)) throw std::invalid_argument("FqMatrix: modulus is not prime");
}

FqMatrix FqMatrix::identity(int n, int p) {
  FqMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::permutation(const Perm& w, int p) {
  FqMatrix m(w.rank(), p);
  for (int j = 0; j < w.rank(); ++j) m.set(w(j), j, 1);
  return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<long long>>& rows, int p) {
  const int n = static_cast<int>(rows.size());
  FqMatrix m(n, p);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw ShapeError("FqMatrix: rows must form a square matrix");
    for (int j = 0; j < n; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

void FqMatrix::set(int i, int j, long long value) {
  a_[static_cast<std::size_t>(i * n_ + j)] = reduce(value, p_);
}

std::vector<std::vector<int>> FqMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
  return out;
}

void FqMatrix::check_same(const FqMatrix& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw ShapeError("FqMatrix: size or modulus mismatch");
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  check_same(o);
  FqMatrix r(n_, p_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const int x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j)
        r.a_[static_cast<std::size_t>(i * n_ + j)] += x * o.at(k, j);
    }
  for (auto& v : r.a_) v %= p_;
  return r;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  check_same(o);
  FqMatrix r(n_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + o.a_[k]) % p_;
  return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  check_same(o);
  FqMatrix r(n_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] - o.a_[k] + p_) % p_;
  return r;
}

int FqMatrix::rank() const { return rank(0, n_, 0, n_); }

int FqMatrix::rank(int r0, int r1, int c0, int c1) const {
  const int rows = r1 - r0, cols = c1 - c0;
  if (rows <= 0 || cols <= 0) return 0;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(r0 + i, c0 + j);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    const int inv = inverse_mod(prow[static_cast<std::size_t>(c)], p_);
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const int f = row[static_cast<std::size_t>(c)] * inv % p_;
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        row[static_cast<std::size_t>(j)] = reduce(row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)], p_);
    }
    ++rank;
  }
  return rank;
}

std::optional<FqMatrix> FqMatrix::inverse() const {
  // Gauss-Jordan on [A | I].
  const int n = n_;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
    auto& prow = m[static_cast<std::size_t>(c)];
    const int inv = inverse_mod(prow[static_cast<std::size_t>(c)], p_);
    for (auto& x : prow) x = x * inv % p_;
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const int f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j)
        row[static_cast<std::size_t>(j)] = reduce(row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)], p_);
    }
  }
  FqMatrix r(n, p_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
  return r;
}

std::vector<int> block_of(const std::vector<int>& blocks) {
  std::vector<int> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int k = 0; k < blocks[b]; ++k) out.push_back(static_cast<int>(b));
  return out;
}

bool FqMatrix::in_parabolic(const std::vector<int>& blocks) const {
  const auto idx = block_of(blocks);
  if (static_cast<int>(idx.size()) != n_) throw ShapeError("FqMatrix: composition does not sum to n");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)] && at(i, j) != 0) return false;
  return true;
}

bool FqMatrix::in_nilradical(const std::vector<int>& blocks) const {
  const auto idx = block_of(blocks);
  if (static_cast<int>(idx.size()) != n_) throw ShapeError("FqMatrix: composition does not sum to n");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (idx[static_cast<std::size_t>(i)] >= idx[static_cast<std::size_t>(j)] && at(i, j) != 0) return false;
  return true;
}

bool FqMatrix::is_upper() const { return in_parabolic(std::vector<int>(static_cast<std::size_t>(n_), 1)); }

bool FqMatrix::is_strictly_upper() const {
  return in_nilradical(std::vector<int>(static_cast<std::size_t>(n_), 1));
}

FqMatrix conjugate_by_inverse(const FqMatrix& g, const FqMatrix& g_inv, const FqMatrix& nu) {
  return g_inv * nu * g;
}

}  // namespace weylcomp
