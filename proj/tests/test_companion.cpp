#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "weylcomp/companion.hpp"

using namespace weylcomp;

namespace {

MultiPerm m1(std::vector<int> one_line) { return MultiPerm::single(Perm::from_one_line(one_line)); }
IntegralWeight w1(std::vector<long long> v) { return IntegralWeight::single(std::move(v)); }

RefinementSpec one_place(int n, long long q = 3, std::optional<std::vector<Rational>> values = std::nullopt) {
  Place v;
  v.label = "v";
  v.q = q;
  v.embeddings = {"t"};
  for (int i = 1; i <= n; ++i) v.eigenvalue_labels.push_back("phi" + std::to_string(i));
  v.eigenvalues = std::move(values);
  return RefinementSpec({v});
}

}  // namespace

TEST_CASE("weights from Hodge-Tate weights") {
  const auto hd = weights_from_hodge(w1({1, 1, 2}));
  CHECK(hd.lambda.at("t") == std::vector<long long>{2, 2, 3});
  CHECK(hd.P == ParabolicSpec::single({2, 1}));
  CHECK(weights_from_hodge(w1({0, 3, 7})).P.is_borel());
  CHECK_THROWS_AS(weights_from_hodge(w1({2, 1, 1})), std::invalid_argument);
}

TEST_CASE("w_0 dot lambda is the staircase shift of h") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> step(0, 2), start(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<long long> h{start(rng)};
    while (static_cast<int>(h.size()) < n) h.push_back(h.back() + step(rng));
    const auto hd = weights_from_hodge(w1(h));
    const auto got = dot_act(MultiPerm::longest({"t"}, n), hd.lambda).at("t");
    for (int i = 0; i < n; ++i) CHECK(got[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(i)] + i);
    // lambda + rho dominant
    const auto rho = staircase_rho({"t"}, n);
    CHECK(dominance(hd.lambda + rho, ParabolicSpec::full({"t"}, n), Dominance::dominant));
  }
}

TEST_CASE("relative position") {
  const IntegralWeight h = w1({1, 1, 2});
  const auto P = ParabolicSpec::single({2, 1});
  CHECK(relative_position(h, h) == CosetRep(MultiPerm::identity({"t"}, 3), P));
  CHECK(relative_position(w1({2, 1, 1}), h) == CosetRep(MultiPerm::longest({"t"}, 3), P));
  CHECK_THROWS_AS(relative_position(w1({2, 2, 1}), h), std::invalid_argument);
  // Exhaustive uniqueness: exactly one coset moves h to each rearrangement.
  for (const auto& hv : std::vector<std::vector<long long>>{{0, 0, 1, 1}, {0, 1, 1, 3}, {2, 2, 2, 5}, {0, 1, 2, 3}}) {
    const IntegralWeight hw = w1(hv);
    for (const auto& p : all_perms(4)) {
      const auto c = act(MultiPerm::single(p), hw);
      const auto r = relative_position(c, hw);
      CHECK(act(r.rep(), hw) == c);
      std::set<MultiPerm> hits;
      for (const auto& q : all_perms(4))
        if (act(MultiPerm::single(q), hw) == c) hits.insert(CosetRep(MultiPerm::single(q), r.spec()).rep());
      CHECK(hits.size() == 1);
    }
  }
}

TEST_CASE("character twist") {
  const CharacterSymbol c{w1({1, 2, 1}), {"a", "b", "c"}, false};
  const auto t = c.twist();
  CHECK(t.algebraic_weight.at("t") == std::vector<long long>{1, 3, 3});
  CHECK(t.untwist() == c);
  CHECK_THROWS_AS(t.twist(), std::logic_error);
  CHECK_THROWS_AS(c.untwist(), std::logic_error);
}

TEST_CASE("companion set of the worked configuration") {
  const IntegralWeight h = w1({1, 1, 2});
  const auto P = ParabolicSpec::single({2, 1});
  const auto set = companion_set(one_place(3), h, CosetRep(m1({1, 3, 2}), P));
  REQUIRE(set.size() == 2);
  CHECK(set[0].w.rep() == m1({1, 3, 2}));
  CHECK(set[0].delta.algebraic_weight.at("t") == std::vector<long long>{1, 3, 3});
  CHECK(set[1].w.rep() == m1({2, 3, 1}));
  CHECK(set[1].delta.algebraic_weight.at("t") == std::vector<long long>{2, 2, 3});
  CHECK(set[1].delta.twisted);
  CHECK(set[0].delta.smooth_labels == std::vector<std::string>{"phi1", "phi2", "phi3"});
}

TEST_CASE("companion set small cases") {
  const auto top = companion_set(one_place(3), w1({1, 1, 2}),
                                 CosetRep(MultiPerm::longest({"t"}, 3), ParabolicSpec::single({2, 1})));
  CHECK(top.size() == 1);
  const auto two = companion_set(one_place(2), w1({0, 1}), CosetRep(MultiPerm::identity({"t"}, 2), ParabolicSpec::single({1, 1})));
  REQUIRE(two.size() == 2);
  CHECK(two[0].delta.algebraic_weight.at("t") == std::vector<long long>{0, 2});
  CHECK(two[1].delta.algebraic_weight.at("t") == std::vector<long long>{1, 1});
}

TEST_CASE("companion sets are upper ideals and monotone") {
  for (const auto& hv : std::vector<std::vector<long long>>{{0, 1, 2, 3}, {0, 0, 1, 2}, {0, 1, 1, 1}, {0, 0, 1, 1}}) {
    const IntegralWeight h = w1(hv);
    const auto P = parabolic_of(h);
    const auto R = one_place(4);
    for (const auto& w_R : all_cosets(P)) {
      const auto set = companion_set(R, h, w_R);
      CHECK(set.size() == oracle::upper_ideal(w_R.rep().at("t"), P.at("t")).size());
      for (const auto& e : set) {
        CHECK(quotient_leq(w_R, e.w));
        CHECK(e.delta.untwist().algebraic_weight == act(e.w.rep(), h));
      }
      for (const auto& smaller : all_cosets(P)) {
        if (!quotient_leq(smaller, w_R)) continue;
        const auto big = companion_set(R, h, smaller);
        for (const auto& e : set) CHECK(std::find(big.begin(), big.end(), e) != big.end());
      }
    }
  }
}

TEST_CASE("Jordan-Holder cosets") {
  const auto B = ParabolicSpec::borel({"t"}, 3);
  CHECK(jordan_holder_cosets(CosetRep(MultiPerm::identity({"t"}, 3), B)).size() == 1);
  CHECK(jordan_holder_cosets(CosetRep(MultiPerm::longest({"t"}, 3), B)).size() == 6);
  const auto P = ParabolicSpec::single({2, 1});
  const auto jh = jordan_holder_cosets(CosetRep(MultiPerm::longest({"t"}, 3), P));
  CHECK(jh.size() == 3);
  CHECK(jh.back() == CosetRep(MultiPerm::longest({"t"}, 3), P));
}

TEST_CASE("certified walks are saturated") {
  const auto B2 = ParabolicSpec::borel({"t"}, 2);
  const auto single = certify_walk(CosetRep(MultiPerm::identity({"t"}, 2), B2), w1({0, 1}));
  REQUIRE(single.chain.size() == 1);
  CHECK(single.chain[0].alpha == Root{"t", 0, 1});
  const auto P = ParabolicSpec::single({2, 1});
  CHECK(certify_walk(CosetRep(MultiPerm::longest({"t"}, 3), P), w1({1, 1, 2})).chain.empty());
  for (const auto& Q : all_parabolics({"t"}, 4)) {
    const auto h = p_regular_witness(Q);
    const int top = lg_P(MultiPerm::longest({"t"}, 4), Q);
    for (const auto& c : all_cosets(Q)) {
      const auto cert = certify_walk(c, h);
      CHECK(static_cast<int>(cert.chain.size()) == top - c.length());
      CHECK(is_maximal_coset(cert.end()));
      CosetRep cur = c;
      for (const auto& s : cert.chain) {
        CHECK(s.from == cur);
        CHECK(s.to.length() == cur.length() + 1);
        cur = s.to;
      }
    }
  }
}

TEST_CASE("genericity") {
  CHECK(genericity_check(one_place(2, 3, std::vector<Rational>{1, 2})));
  CHECK_FALSE(genericity_check(one_place(2, 3, std::vector<Rational>{1, 1})));
  CHECK_FALSE(genericity_check(one_place(2, 5, std::vector<Rational>{1, 5})));
  CHECK_FALSE(genericity_check(one_place(2, 5, std::vector<Rational>{Rational(7, 3), Rational(7, 15)})));
  CHECK(genericity_check(one_place(3, 5, std::vector<Rational>{1, Rational(1, 2), 3})));
  CHECK_THROWS_AS(genericity_check(one_place(2)), std::invalid_argument);
  CHECK_THROWS_AS(genericity_check(one_place(2, 3, std::vector<Rational>{0, 1})), std::invalid_argument);
}

TEST_CASE("refinement validation") {
  Place v{"v", 3, {"t"}, {"a", "a"}, std::nullopt};
  CHECK_THROWS_AS(RefinementSpec({v}), std::invalid_argument);
  v.eigenvalue_labels = {"a", "b"};
  v.q = 0;
  CHECK_THROWS_AS(RefinementSpec({v}), std::invalid_argument);
  v.q = 3;
  Place w = v;
  w.label = "w";
  CHECK_THROWS_AS(RefinementSpec({v, w}), std::invalid_argument);  // embedding t twice
  w.embeddings = {"s"};
  const RefinementSpec ok({v, w});
  CHECK(ok.embeddings() == std::vector<std::string>{"s", "t"});
}

TEST_CASE("two places") {
  Place v{"v", 3, {"a"}, {"x1", "x2"}, std::nullopt};
  Place u{"u", 5, {"b"}, {"y1", "y2"}, std::nullopt};
  const RefinementSpec R({v, u});
  const IntegralWeight h(IntegralWeight::Coords{{"a", {0, 1}}, {"b", {0, 1}}});
  const auto P = parabolic_of(h);
  const auto set = companion_set(R, h, CosetRep(MultiPerm::identity({"a", "b"}, 2), P));
  CHECK(set.size() == 4);
  CHECK(set.front().delta.smooth_labels == std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK(certify_walk(set.front().w, h).chain.size() == 2);
}
