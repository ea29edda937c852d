#include <doctest.h>

#include "oracles.hpp"
#include "weylcomp/parabolic.hpp"

using namespace weylcomp;

namespace {

MultiPerm m1(std::vector<int> one_line) { return MultiPerm::single(Perm::from_one_line(one_line)); }

}  // namespace

TEST_CASE("minimal coset representatives match orbit scanning") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& blocks : compositions(n)) {
      const auto P = ParabolicSpec::single(blocks);
      for (const auto& w : all_perms(n))
        CHECK(min_coset_rep(MultiPerm::single(w), P).at("t") == oracle::min_in_coset(w, blocks));
    }
}

TEST_CASE("decompose and lg_P") {
  const auto P = ParabolicSpec::single({2, 1});
  for (const auto& p : all_perms(3)) {
    const auto w = MultiPerm::single(p);
    const auto d = decompose(w, P);
    CHECK(compose(d.min_part, d.levi_part) == w);
    CHECK(is_min_rep(d.min_part, P));
    CHECK(in_parabolic(d.levi_part, P));
    CHECK(lg_P(w, P) == static_cast<int>(inversion_set(w, &P).size()));
  }
  CHECK(lg_P(MultiPerm::longest({"t"}, 3), P) == 2);
  CHECK(lg_P(m1({2, 1, 3}), P) == 0);
}

TEST_CASE("W^P sizes and ordering") {
  CHECK(min_coset_reps(ParabolicSpec::single({2, 1})).size() == 3);
  CHECK(min_coset_reps(ParabolicSpec::single({2, 2})).size() == 6);
  CHECK(min_coset_reps(ParabolicSpec::single({1, 1, 1, 1})).size() == 24);
  const auto reps = min_coset_reps(ParabolicSpec::single({2, 1}));
  CHECK(reps[0] == m1({1, 2, 3}));
  CHECK(reps[1] == m1({1, 3, 2}));
  CHECK(reps[2] == m1({2, 3, 1}));
  for (std::size_t k = 1; k < reps.size(); ++k) CHECK(reps[k - 1].length() <= reps[k].length());
}

TEST_CASE("longest elements") {
  CHECK(longest_in_parabolic(ParabolicSpec::single({2, 1})) == m1({2, 1, 3}));
  CHECK(longest_in_parabolic(ParabolicSpec::single({1, 3})) == m1({1, 4, 3, 2}));
  CHECK(parabolic_subgroup(ParabolicSpec::single({2, 2})).size() == 4);
  CHECK(parabolic_subgroup(ParabolicSpec(ParabolicSpec::Blocks{{"a", {3}}, {"b", {2, 1}}})).size() == 12);
}

TEST_CASE("quotient Bruhat order") {
  const auto P = ParabolicSpec::single({2, 1});
  const CosetRep e(MultiPerm::identity({"t"}, 3), P), top(MultiPerm::longest({"t"}, 3), P);
  for (const auto& c : all_cosets(P)) {
    CHECK(quotient_leq(e, c));
    CHECK(quotient_leq(c, top));
  }
  const CosetRep other(MultiPerm::identity({"t"}, 3), ParabolicSpec::single({1, 2}));
  CHECK_THROWS_AS(quotient_leq(e, other), ShapeError);
}

TEST_CASE("length splitting statistics") {
  CHECK(length_split_stats(Perm::longest(3), {2, 1}) == LengthSplit{1, 2});
  CHECK(length_split_stats(Perm::identity(4), {2, 2}) == LengthSplit{0, 0});
  CHECK_THROWS_AS(length_split_stats(Perm::identity(4), {2, 1}), ShapeError);
  for (const auto& blocks : compositions(4)) {
    const auto P = ParabolicSpec::single(blocks);
    for (const auto& s : all_perms(4)) {
      const auto d = decompose(MultiPerm::single(s), P);
      const auto split = length_split_stats(s, blocks);
      CHECK(split.within == d.levi_part.length());
      CHECK(split.across == d.min_part.length());
    }
  }
}

TEST_CASE("shortest double coset representative") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& qb : compositions(n))
      for (const auto& pb : compositions(n)) {
        const auto Q = ParabolicSpec::single(qb), P = ParabolicSpec::single(pb);
        for (const auto& w : all_perms(n)) {
          const auto mw = MultiPerm::single(w);
          const auto r = shortest_double_coset_rep(mw, Q, P);
          CHECK(r.at("t").length() == oracle::min_in_double_coset(w, qb, pb).length());
          CHECK(r == shortest_double_coset_rep_normalized(mw, Q, P));
          CHECK(is_min_rep(r, P));
          CHECK(is_left_min_rep(r, Q));
        }
      }
}

TEST_CASE("coset shape errors") {
  CHECK_THROWS_AS(CosetRep(MultiPerm::identity({"t"}, 3), ParabolicSpec::single({2, 2})), ShapeError);
  CHECK_THROWS_AS(min_coset_rep(MultiPerm::identity({"a"}, 2), ParabolicSpec::single({2}, "b")), ShapeError);
}
