#pragma once

// Symmetric groups S_n and their products over a set of embedding labels.
//
// Internally positions and values are 0-based; one-line notation at the I/O
// boundary is 1-based (see Perm::from_one_line / Perm::one_line).

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylcomp {

/// Raised when two values that must share a shape (rank, label set, spec) do not.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {0..n-1}; images_[i] = w(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm longest(int n);
  /// The simple reflection s_i swapping i and i+1 (0-based, 0 <= i < n-1).
  static Perm simple(int n, int i);
  /// From 1-based one-line notation.
  static Perm from_one_line(const std::vector<int>& one_line);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  Perm inverse() const;
  /// Inversion count #{i<j : w(i) > w(j)}.
  int length() const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// (u∘v)(i) = u(v(i)).
Perm compose(const Perm& u, const Perm& v);

/// Ehresmann's sorted-prefix criterion.
bool bruhat_leq(const Perm& u, const Perm& v);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Perm> all_perms(int n);

/// Left descents of w: simple indices i with w^{-1}(i) > w^{-1}(i+1).
std::vector<int> left_descents(const Perm& w);

/// Reduced word as simple indices, read left to right: w = s_{a_1} ... s_{a_k}.
/// The first letter is always the smallest left descent.
std::vector<int> reduced_word(const Perm& w);

/// Element of W = prod_{tau} S_n. Labels are kept in std::map order, which is
/// the fixed total order on the label set used everywhere for tie-breaking.
class MultiPerm {
 public:
  using Parts = std::map<std::string, Perm>;

  MultiPerm() = default;
  explicit MultiPerm(Parts parts);

  static MultiPerm identity(const std::vector<std::string>& labels, int n);
  static MultiPerm longest(const std::vector<std::string>& labels, int n);
  static MultiPerm simple(const std::vector<std::string>& labels, int n,
                          const std::string& tau, int i);
  /// Single-label convenience; the label is "t".
  static MultiPerm single(const Perm& p, const std::string& tau = "t");

  const Parts& parts() const { return parts_; }
  const Perm& at(const std::string& tau) const;
  int rank() const { return rank_; }
  std::vector<std::string> labels() const;
  bool same_shape(const MultiPerm& other) const;

  MultiPerm inverse() const;
  int length() const;
  bool is_identity() const;

  friend bool operator==(const MultiPerm&, const MultiPerm&) = default;
  friend auto operator<=>(const MultiPerm&, const MultiPerm&) = default;

 private:
  Parts parts_;
  int rank_ = 0;
};

MultiPerm compose(const MultiPerm& u, const MultiPerm& v);
bool bruhat_leq(const MultiPerm& u, const MultiPerm& v);

struct WordLetter {
  std::string tau;
  int index = 0;  // simple root (index, index+1), 0-based
  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// Reduced word; ties broken by smallest simple index, then smallest label.
std::vector<WordLetter> reduced_word(const MultiPerm& w);

/// Product of a word of simple reflections.
MultiPerm word_product(const std::vector<WordLetter>& word,
                       const std::vector<std::string>& labels, int n);

/// Every element of prod_tau S_n (cartesian product, label-major order).
std::vector<MultiPerm> all_multiperms(const std::vector<std::string>& labels, int n);

}  // namespace weylcomp
