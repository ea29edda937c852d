#pragma once

// Type-A root data for prod_tau GL_n.
//
// A root (tau, i, j) is e_i - e_j in the tau-factor (0-based i != j); it is
// positive iff i < j. Weights and coweights share IntegralWeight; the pairing
// is <e_i - e_j, x> = x_i - x_j. W acts on vectors by place permutation,
// (w.x)_i = x_{w^{-1}(i)}, and on roots by (i, j) -> (w(i), w(j)), so that
// <w(a), w(x)> = <a, x>.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylcomp/weyl.hpp"

namespace weylcomp {

struct Root {
  std::string tau;
  int i = 0;
  int j = 1;

  bool positive() const { return i < j; }
  bool simple() const { return j == i + 1; }
  Root negated() const { return {tau, j, i}; }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Per-label integer n-vectors (weights lambda, coweights h).
class IntegralWeight {
 public:
  using Coords = std::map<std::string, std::vector<long long>>;

  IntegralWeight() = default;
  explicit IntegralWeight(Coords coords);
  static IntegralWeight single(std::vector<long long> v, const std::string& tau = "t");
  static IntegralWeight constant(const std::vector<std::string>& labels, int n, long long c);

  const Coords& coords() const { return coords_; }
  const std::vector<long long>& at(const std::string& tau) const;
  int rank() const { return rank_; }
  std::vector<std::string> labels() const;

  IntegralWeight operator+(const IntegralWeight& o) const;
  IntegralWeight operator-(const IntegralWeight& o) const;

  friend bool operator==(const IntegralWeight&, const IntegralWeight&) = default;

 private:
  Coords coords_;
  int rank_ = 0;
};

/// Per-label block composition of n defining a standard parabolic P.
class ParabolicSpec {
 public:
  using Blocks = std::map<std::string, std::vector<int>>;

  ParabolicSpec() = default;
  explicit ParabolicSpec(Blocks blocks);
  static ParabolicSpec single(std::vector<int> blocks, const std::string& tau = "t");
  /// B: all blocks of size 1.
  static ParabolicSpec borel(const std::vector<std::string>& labels, int n);
  /// G: one block of size n.
  static ParabolicSpec full(const std::vector<std::string>& labels, int n);
  /// B(alpha): the minimal parabolic whose only simple root is alpha.
  static ParabolicSpec minimal(const std::vector<std::string>& labels, int n, const Root& alpha);

  const Blocks& blocks() const { return blocks_; }
  const std::vector<int>& at(const std::string& tau) const;
  int rank() const { return rank_; }
  std::vector<std::string> labels() const;

  /// Block index of each position for label tau.
  std::vector<int> block_index(const std::string& tau) const;
  bool same_block(const std::string& tau, int i, int j) const;
  bool is_borel() const;

  friend bool operator==(const ParabolicSpec&, const ParabolicSpec&) = default;
  friend auto operator<=>(const ParabolicSpec&, const ParabolicSpec&) = default;

 private:
  Blocks blocks_;
  int rank_ = 0;
};

/// All compositions of n, lexicographic.
std::vector<std::vector<int>> compositions(int n);
/// Every ParabolicSpec over the given labels (product of compositions).
std::vector<ParabolicSpec> all_parabolics(const std::vector<std::string>& labels, int n);

long long pairing(const Root& a, const IntegralWeight& x);
Root act(const MultiPerm& w, const Root& a);
IntegralWeight act(const MultiPerm& w, const IntegralWeight& x);

/// Integer staircase (n-1, ..., 0) on every label; differs from rho by a constant.
IntegralWeight staircase_rho(const std::vector<std::string>& labels, int n);
/// w . lambda = w(lambda + rho) - rho, computed with the integer staircase.
IntegralWeight dot_act(const MultiPerm& w, const IntegralWeight& lambda);

std::vector<Root> all_roots(const std::vector<std::string>& labels, int n);
std::vector<Root> positive_roots(const std::vector<std::string>& labels, int n);
std::vector<Root> simple_roots(const std::vector<std::string>& labels, int n);
/// Delta_P: simple roots inside a block.
std::vector<Root> simple_roots(const ParabolicSpec& spec);
/// R_P (both signs).
std::vector<Root> levi_roots(const ParabolicSpec& spec);
bool in_levi(const ParabolicSpec& spec, const Root& a);

/// {a in R^+ : w(a) in R^-}; with relative_to, restricted to R^+ \ R_P^+.
std::set<Root> inversion_set(const MultiPerm& w, const ParabolicSpec* relative_to = nullptr);

enum class Dominance { dominant, antidominant, strict };

/// Sign condition of <a, x> over a in Delta_spec.
bool dominance(const IntegralWeight& x, const ParabolicSpec& spec, Dominance mode);

/// <a,h> = 0 on Delta_P, <= 0 on Delta, < 0 on Delta \ Delta_P.
bool p_regular_antidominant(const IntegralWeight& h, const ParabolicSpec& P);

/// Canonical P-regular antidominant coweight: block k carries the value k.
IntegralWeight p_regular_witness(const ParabolicSpec& P);

/// Block-constant coweight with the given positive gaps between consecutive
/// blocks (cycled if shorter than needed) plus an offset.
IntegralWeight p_regular_witness(const ParabolicSpec& P, const std::vector<long long>& gaps,
                                 long long offset);

}  // namespace weylcomp
