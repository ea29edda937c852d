#include "weylcomp/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcomp {

void to_json(json& j, const Perm& p) { j = p.one_line(); }

void to_json(json& j, const MultiPerm& w) {
  j = json::object();
  for (const auto& [tau, p] : w.parts()) j[tau] = p.one_line();
}

void to_json(json& j, const WordLetter& l) { j = json{{"tau", l.tau}, {"index", l.index + 1}}; }

void to_json(json& j, const Root& a) { j = json{{"tau", a.tau}, {"i", a.i + 1}, {"j", a.j + 1}}; }

void to_json(json& j, const IntegralWeight& x) {
  j = json::object();
  for (const auto& [tau, v] : x.coords()) j[tau] = v;
}

void to_json(json& j, const ParabolicSpec& P) {
  j = json::object();
  for (const auto& [tau, c] : P.blocks()) j[tau] = c;
}

void to_json(json& j, const CosetRep& c) {
  j = json{{"rep", c.rep()}, {"blocks", c.spec()}, {"length", c.length()}};
}

void to_json(json& j, const InductionStep& s) {
  j = json{{"alpha", s.alpha}, {"q_blocks", s.Q}, {"from", s.from}, {"to", s.to}};
}

void to_json(json& j, const CharacterSymbol& c) {
  j = json{{"algebraic_weight", c.algebraic_weight}, {"smooth_labels", c.smooth_labels}, {"twisted", c.twisted}};
}

void to_json(json& j, const CompanionEntry& e) { j = json{{"coset", e.w}, {"character", e.delta}}; }

void to_json(json& j, const CompanionCertificate& c) { j = json{{"start", c.start}, {"chain", c.chain}}; }

std::string rational_to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  const auto den = boost::multiprecision::denominator(r);
  if (den != 1) s += "/" + den.str();
  return s;
}

void to_json(json& j, const Place& v) {
  j = json{{"label", v.label}, {"q", v.q}, {"embeddings", v.embeddings}, {"refinement_order", v.eigenvalue_labels}};
  if (v.eigenvalues) {
    json values = json::array();
    for (const auto& r : *v.eigenvalues) values.push_back(rational_to_string(r));
    j["eigenvalues"] = values;
  }
}

void to_json(json& j, const RefinementSpec& R) { j = json{{"places", R.places()}}; }

void to_json(json& j, const LengthSplit& s) { j = json{{"within", s.within}, {"across", s.across}}; }

// ---------------------------------------------------------------------------

namespace {

// json::get converts floats silently; reject them instead.
template <typename T>
std::vector<T> integer_array(const json& j) {
  if (!j.is_array() || !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number_integer(); }))
    throw std::invalid_argument("expected an array of integers, got " + j.dump());
  return j.get<std::vector<T>>();
}

}  // namespace

Perm perm_from_json(const json& j) { return Perm::from_one_line(integer_array<int>(j)); }

MultiPerm multiperm_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("permutation must be an object of label -> one-line array");
  MultiPerm::Parts parts;
  for (const auto& [tau, v] : j.items()) parts.emplace(tau, perm_from_json(v));
  return MultiPerm(std::move(parts));
}

Root root_from_json(const json& j) {
  return {j.at("tau").get<std::string>(), j.at("i").get<int>() - 1, j.at("j").get<int>() - 1};
}

IntegralWeight weight_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("weight must be an object of label -> integer array");
  IntegralWeight::Coords coords;
  for (const auto& [tau, v] : j.items()) coords.emplace(tau, integer_array<long long>(v));
  return IntegralWeight(std::move(coords));
}

ParabolicSpec parabolic_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("blocks must be an object of label -> composition");
  ParabolicSpec::Blocks blocks;
  for (const auto& [tau, v] : j.items()) blocks.emplace(tau, integer_array<int>(v));
  return ParabolicSpec(std::move(blocks));
}

CosetRep coset_from_json(const json& j) {
  return CosetRep(multiperm_from_json(j.at("rep")), parabolic_from_json(j.at("blocks")));
}

InductionStep induction_step_from_json(const json& j) {
  return {root_from_json(j.at("alpha")), parabolic_from_json(j.at("q_blocks")), coset_from_json(j.at("from")),
          coset_from_json(j.at("to"))};
}

CharacterSymbol character_from_json(const json& j) {
  return {weight_from_json(j.at("algebraic_weight")), j.at("smooth_labels").get<std::vector<std::string>>(),
          j.at("twisted").get<bool>()};
}

CompanionEntry companion_entry_from_json(const json& j) {
  return {coset_from_json(j.at("coset")), character_from_json(j.at("character"))};
}

CompanionCertificate certificate_from_json(const json& j) {
  CompanionCertificate c{coset_from_json(j.at("start")), {}};
  for (const auto& s : j.at("chain")) c.chain.push_back(induction_step_from_json(s));
  return c;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return Rational(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("'" + s + "' is not an exact rational (use \"a/b\")");
    }
  }
  throw std::invalid_argument("eigenvalues must be integers or \"a/b\" strings");
}

Place place_from_json(const json& j) {
  Place v;
  v.label = j.at("label").get<std::string>();
  v.q = j.at("q").get<long long>();
  v.embeddings = j.at("embeddings").get<std::vector<std::string>>();
  v.eigenvalue_labels = j.at("refinement_order").get<std::vector<std::string>>();
  if (j.contains("eigenvalues")) {
    std::vector<Rational> values;
    for (const auto& x : j.at("eigenvalues")) values.push_back(rational_from_json(x));
    v.eigenvalues = std::move(values);
  }
  return v;
}

RefinementSpec refinement_from_json(const json& j) {
  std::vector<Place> places;
  for (const auto& v : j.at("places")) places.push_back(place_from_json(v));
  return RefinementSpec(std::move(places));
}

}  // namespace weylcomp
