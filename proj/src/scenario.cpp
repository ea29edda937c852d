#include "weylcomp/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "weylcomp/ff_oracle.hpp"
#include "weylcomp/serialize.hpp"

namespace weylcomp {

ScenarioError::ScenarioError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ScenarioError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

template <typename F>
auto at_field(const std::string& path, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(path, e.what());
  }
}

// Per-label integer vectors of a place, restricted to its embeddings.
IntegralWeight::Coords place_vectors(const json& obj, const std::vector<std::string>& embeddings,
                                     const std::string& path) {
  if (!obj.is_object()) throw ScenarioError(path, "expected an object of embedding -> integer array");
  IntegralWeight::Coords out;
  for (const auto& tau : embeddings) {
    const auto& v = require(obj, tau, path);
    if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_integer(); }))
      throw ScenarioError(path + "." + tau, "expected an array of integers");
    out.emplace(tau, v.get<std::vector<long long>>());
  }
  for (const auto& [tau, v] : obj.items())
    if (std::find(embeddings.begin(), embeddings.end(), tau) == embeddings.end())
      throw ScenarioError(path + "." + tau, "not an embedding of this place");
  return out;
}

FfVerifyRequest parse_ff_verify(const json& j) {
  const std::string path = "ff_verify";
  if (!j.is_object()) throw ScenarioError(path, "expected an object");
  FfVerifyRequest r;
  at_field(path, [&] {
    r.suite = j.value("suite", r.suite);
    r.n = j.value("n", r.n);
    r.p = j.value("p", r.p);
    r.threads = j.value("threads", r.threads);
    r.override_caps = j.value("override_caps", r.override_caps);
    return 0;
  });
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), r.suite) == names.end())
    throw ScenarioError(path + ".suite", "unknown suite '" + r.suite + "'");
  if (r.threads == 0) throw ScenarioError(path + ".threads", "must be at least 1");
  return r;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc = json::object();
  try {
    // A blank file is an empty scenario, so the report names the first missing field.
    if (text.find_first_not_of(" \t\r\n") != std::string::npos) doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("", "JSON syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                                e.what());
  }
  if (!doc.is_object()) throw ScenarioError("", "scenario must be a JSON object");
  const auto& places_json = require(doc, "places", "");
  if (!places_json.is_array() || places_json.empty()) throw ScenarioError("places", "expected a non-empty array");

  std::vector<Place> places;
  IntegralWeight::Coords hodge;
  MultiPerm::Parts w_parts;
  std::optional<std::size_t> n;
  for (std::size_t k = 0; k < places_json.size(); ++k) {
    const std::string path = "places[" + std::to_string(k) + "]";
    const auto& pj = places_json[k];
    if (!pj.is_object()) throw ScenarioError(path, "expected an object");
    for (const char* key : {"label", "q", "embeddings", "refinement_order", "hodge_weights"}) require(pj, key, path);
    if (!pj["q"].is_number_integer()) throw ScenarioError(path + ".q", "must be a positive integer");
    Place v = at_field(path, [&] { return place_from_json(pj); });
    if (v.q <= 0) throw ScenarioError(path + ".q", "must be a positive integer");
    if (v.embeddings.empty()) throw ScenarioError(path + ".embeddings", "must list at least one embedding");
    if (n && *n != v.eigenvalue_labels.size())
      throw ScenarioError(path + ".refinement_order", "every place needs the same number of eigenvalues");
    n = v.eigenvalue_labels.size();
    if (*n == 0) throw ScenarioError(path + ".refinement_order", "must be non-empty");

    auto h_place = place_vectors(pj.at("hodge_weights"), v.embeddings, path + ".hodge_weights");
    for (auto& [tau, h] : h_place) {
      if (h.size() != *n)
        throw ScenarioError(path + ".hodge_weights." + tau, "length differs from refinement_order");
      std::sort(h.begin(), h.end());
    }
    const IntegralWeight h_weight(h_place);

    const bool has_w = pj.contains("w_R"), has_params = pj.contains("parameter_weights");
    if (has_w == has_params)
      throw ScenarioError(path + ".w_R", has_w ? "give either w_R or parameter_weights, not both"
                                               : "missing required field (or give parameter_weights)");
    if (has_w) {
      const auto& wj = pj.at("w_R");
      if (!wj.is_object()) throw ScenarioError(path + ".w_R", "expected an object of embedding -> one-line array");
      for (const auto& tau : v.embeddings) {
        const auto& line = require(wj, tau, path + ".w_R");
        Perm p = at_field(path + ".w_R." + tau, [&] { return perm_from_json(line); });
        if (static_cast<std::size_t>(p.rank()) != *n)
          throw ScenarioError(path + ".w_R." + tau, "length differs from refinement_order");
        w_parts.emplace(tau, std::move(p));
      }
    } else {
      const IntegralWeight params(place_vectors(pj.at("parameter_weights"), v.embeddings, path + ".parameter_weights"));
      const CosetRep c =
          at_field(path + ".parameter_weights", [&] { return relative_position(params, h_weight); });
      for (const auto& [tau, p] : c.rep().parts()) w_parts.emplace(tau, p);
    }
    for (auto& [tau, h] : h_place) hodge.emplace(tau, std::move(h));
    places.push_back(std::move(v));
  }

  Scenario s{at_field("places", [&] { return RefinementSpec(std::move(places)); }), IntegralWeight(std::move(hodge)),
             CosetRep(MultiPerm::identity({"t"}, 1), ParabolicSpec::single({1})), std::nullopt};
  const ParabolicSpec P = parabolic_of(s.h);
  s.w_R = CosetRep(MultiPerm(std::move(w_parts)), P);
  if (doc.contains("ff_verify")) s.ff_verify = parse_ff_verify(doc.at("ff_verify"));
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", "cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace weylcomp
