#pragma once

// JSON encoding of the domain types. Permutations are 1-based one-line
// arrays keyed by embedding label; root indices are 1-based as well.

#include <nlohmann/json.hpp>

#include "weylcomp/companion.hpp"
#include "weylcomp/ff_oracle.hpp"
#include "weylcomp/parabolic.hpp"
#include "weylcomp/roots.hpp"
#include "weylcomp/steinberg.hpp"
#include "weylcomp/weyl.hpp"

namespace weylcomp {

using nlohmann::json;

void to_json(json& j, const Perm& p);
void to_json(json& j, const MultiPerm& w);
void to_json(json& j, const WordLetter& l);
void to_json(json& j, const Root& a);
void to_json(json& j, const IntegralWeight& x);
void to_json(json& j, const ParabolicSpec& P);
void to_json(json& j, const CosetRep& c);
void to_json(json& j, const InductionStep& s);
void to_json(json& j, const CharacterSymbol& c);
void to_json(json& j, const CompanionEntry& e);
void to_json(json& j, const CompanionCertificate& c);
void to_json(json& j, const Place& v);
void to_json(json& j, const RefinementSpec& R);
void to_json(json& j, const LengthSplit& s);

Perm perm_from_json(const json& j);
MultiPerm multiperm_from_json(const json& j);
Root root_from_json(const json& j);
IntegralWeight weight_from_json(const json& j);
ParabolicSpec parabolic_from_json(const json& j);
CosetRep coset_from_json(const json& j);
InductionStep induction_step_from_json(const json& j);
CharacterSymbol character_from_json(const json& j);
CompanionEntry companion_entry_from_json(const json& j);
CompanionCertificate certificate_from_json(const json& j);
Place place_from_json(const json& j);
RefinementSpec refinement_from_json(const json& j);

Rational rational_from_json(const json& j);
std::string rational_to_string(const Rational& r);

}  // namespace weylcomp
