#include <doctest.h>

#include "oracles.hpp"
#include "weylcomp/weyl.hpp"

using namespace weylcomp;

TEST_CASE("perm construction and one-line notation") {
  const Perm w = Perm::from_one_line({2, 3, 1});
  CHECK(w.one_line() == std::vector<int>{2, 3, 1});
  CHECK(w(0) == 1);
  CHECK(w.rank() == 3);
  CHECK_THROWS_AS(Perm::from_one_line({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_one_line({0, 1}), std::invalid_argument);
  CHECK(Perm::longest(4).one_line() == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("compose is functional composition") {
  // s1 s2 in S_3: i -> s1(s2(i))
  const Perm s1 = Perm::simple(3, 0), s2 = Perm::simple(3, 1);
  CHECK(compose(s1, s2).one_line() == std::vector<int>{2, 3, 1});
  CHECK(compose(s2, s1).one_line() == std::vector<int>{3, 1, 2});
  for (const auto& w : all_perms(4)) {
    CHECK(compose(w, w.inverse()).is_identity());
    CHECK(compose(w.inverse(), w).is_identity());
  }
}

TEST_CASE("compose rejects mismatched shapes") {
  const MultiPerm a = MultiPerm::identity({"a"}, 3);
  const MultiPerm b = MultiPerm::identity({"b"}, 3);
  const MultiPerm c = MultiPerm::identity({"a"}, 2);
  CHECK_THROWS_AS(compose(a, b), ShapeError);
  CHECK_THROWS_AS(compose(a, c), ShapeError);
  CHECK_THROWS_AS(bruhat_leq(a, c), ShapeError);
}

TEST_CASE("length equals Cayley graph distance") {
  for (int n = 1; n <= 5; ++n) {
    const auto dist = oracle::cayley_lengths(n);
    CHECK(dist.size() == all_perms(n).size());
    for (const auto& [w, d] : dist) CHECK(w.length() == d);
  }
  CHECK(Perm::longest(4).length() == 6);
  CHECK(MultiPerm::longest({"a", "b"}, 3).length() == 6);
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_perms(n);
    for (const auto& u : perms)
      for (const auto& v : perms) CHECK(bruhat_leq(u, v) == oracle::subword_leq(u, v));
  }
}

TEST_CASE("Bruhat order basics") {
  const Perm e = Perm::identity(3), w0 = Perm::longest(3);
  for (const auto& w : all_perms(3)) {
    CHECK(bruhat_leq(e, w));
    CHECK(bruhat_leq(w, w0));
  }
  // s1 and s2 are incomparable
  CHECK_FALSE(bruhat_leq(Perm::simple(3, 0), Perm::simple(3, 1)));
  CHECK_FALSE(bruhat_leq(Perm::simple(3, 1), Perm::simple(3, 0)));
}

TEST_CASE("multi-label Bruhat order is componentwise") {
  const std::vector<std::string> labels{"a", "b"};
  const auto all = all_multiperms(labels, 3);
  CHECK(all.size() == 36);
  for (const auto& u : all)
    for (const auto& v : all)
      CHECK(bruhat_leq(u, v) == (bruhat_leq(u.at("a"), v.at("a")) && bruhat_leq(u.at("b"), v.at("b"))));
}

TEST_CASE("reduced words multiply back and have minimal length") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_perms(n)) {
      const auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == w.length());
      Perm r = Perm::identity(n);
      for (int i : word) r = compose(r, Perm::simple(n, i));
      CHECK(r == w);
      if (!word.empty()) CHECK(word.front() == left_descents(w).front());
    }
  CHECK(reduced_word(Perm::identity(3)).empty());
}

TEST_CASE("multi-label reduced words") {
  const std::vector<std::string> labels{"a", "b"};
  for (const auto& w : all_multiperms(labels, 3)) {
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(word_product(word, labels, 3) == w);
  }
  // Ties: smallest index first, then the first label.
  const auto w = MultiPerm::longest(labels, 2);
  const auto word = reduced_word(w);
  REQUIRE(word.size() == 2);
  CHECK(word[0] == WordLetter{"a", 0});
  CHECK(word[1] == WordLetter{"b", 0});
}
