#pragma once

// Dense square matrices over a small prime field, and a scalar type for
// generic field algorithms.

#include <compare>
#include <optional>
#include <vector>

#include "weylcomp/weyl.hpp"

namespace weylcomp {

bool is_prime(long long p);
/// a^{-1} mod p for a not divisible by p.
int inverse_mod(long long a, int p);

/// An element of F_p carrying its modulus.
class ModP {
 public:
  ModP() = default;
  ModP(long long value, int p);

  int value() const { return v_; }
  int modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(const ModP& o) const;
  ModP operator-(const ModP& o) const;
  ModP operator*(const ModP& o) const;
  ModP operator/(const ModP& o) const;
  ModP operator-() const;

  friend bool operator==(const ModP&, const ModP&) = default;

 private:
  int p_ = 2;
  int v_ = 0;
};

class FqMatrix {
 public:
  FqMatrix() = default;
  /// Zero matrix.
  FqMatrix(int n, int p);
  static FqMatrix identity(int n, int p);
  /// Entries (w(j), j) equal 1, so that the matrix sends e_j to e_{w(j)}.
  static FqMatrix permutation(const Perm& w, int p);
  static FqMatrix from_rows(const std::vector<std::vector<long long>>& rows, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, long long value);
  std::vector<std::vector<int>> rows() const;

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;

  int rank() const;
  /// Rank of the submatrix on rows [r0, r1) and columns [c0, c1).
  int rank(int r0, int r1, int c0, int c1) const;
  std::optional<FqMatrix> inverse() const;

  /// Block upper triangular for the composition (the Lie algebra p).
  bool in_parabolic(const std::vector<int>& blocks) const;
  /// Zero on and below the diagonal blocks (the nilradical n_P).
  bool in_nilradical(const std::vector<int>& blocks) const;
  bool is_upper() const;
  bool is_strictly_upper() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;

 private:
  void check_same(const FqMatrix& o) const;

  int n_ = 0;
  int p_ = 2;
  std::vector<int> a_;
};

/// g^{-1} nu g, i.e. Ad(g^{-1}) nu, given g^{-1}.
FqMatrix conjugate_by_inverse(const FqMatrix& g, const FqMatrix& g_inv, const FqMatrix& nu);

/// Block index of each coordinate, from a composition.
std::vector<int> block_of(const std::vector<int>& blocks);

}  // namespace weylcomp
