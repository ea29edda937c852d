// Command-line front end: JSON reports by default, --pretty for text.
//
// Exit status: 0 on success, 1 when a requested check failed, 2 on usage,
// parse or validation errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "weylcomp/companion.hpp"
#include "weylcomp/ff_oracle.hpp"
#include "weylcomp/parabolic.hpp"
#include "weylcomp/scenario.hpp"
#include "weylcomp/serialize.hpp"
#include "weylcomp/steinberg.hpp"

using namespace weylcomp;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("'" + s + "' is not a comma-separated integer list");
    }
  }
  return out;
}

// Inputs are either a JSON object keyed by embedding label or, for a single
// embedding, a comma-separated list (label "t").
json label_map(const std::string& s) {
  if (!s.empty() && s.front() == '{') {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("bad JSON argument: ") + e.what());
    }
  }
  return json{{"t", parse_list(s)}};
}

MultiPerm perm_arg(const std::string& s) { return multiperm_from_json(label_map(s)); }
IntegralWeight weight_arg(const std::string& s) { return weight_from_json(label_map(s)); }
ParabolicSpec blocks_arg(const std::string& s) { return parabolic_from_json(label_map(s)); }

void pretty_print(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      const bool leaf = !v.is_structured() ||
                        (v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) ||
                        (v.is_object() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); }) &&
                         v.size() <= 4);
      if (leaf) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        pretty_print(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        pretty_print(os, v, indent + 2);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const json& j, bool pretty) {
  if (pretty)
    pretty_print(std::cout, j);
  else
    std::cout << j.dump(2) << "\n";
}

json word_json(const std::vector<WordLetter>& word) {
  json out = json::array();
  for (const auto& l : word) out.push_back(l);
  return out;
}

json run_weyl(const std::string& w_str, const std::optional<std::string>& other) {
  const MultiPerm w = perm_arg(w_str);
  json out{{"w", w},
           {"length", w.length()},
           {"inverse", w.inverse()},
           {"reduced_word", word_json(reduced_word(w))},
           {"rank", w.rank()}};
  if (other) {
    const MultiPerm v = perm_arg(*other);
    out["other"] = v;
    out["bruhat_leq"] = bruhat_leq(w, v);
    out["bruhat_geq"] = bruhat_leq(v, w);
    out["product"] = compose(w, v);
  }
  return out;
}

json run_coset(const std::optional<std::string>& w_str, const std::string& blocks_str, bool list) {
  const ParabolicSpec P = blocks_arg(blocks_str);
  json out{{"blocks", P}};
  if (list) {
    json cosets = json::array();
    for (const auto& c : all_cosets(P)) cosets.push_back(c);
    out["cosets"] = cosets;
  }
  if (w_str) {
    const MultiPerm w = perm_arg(*w_str);
    const auto d = decompose(w, P);
    out["w"] = w;
    out["coset"] = CosetRep(w, P);
    out["min_rep"] = d.min_part;
    out["levi_part"] = d.levi_part;
    out["max_rep"] = max_coset_rep(w, P);
    out["lg_P"] = lg_P(w, P);
    out["in_W_P"] = in_parabolic(w, P);
    out["is_min_rep"] = is_min_rep(w, P);
    json inv = json::array();
    for (const auto& a : inversion_set(w, &P)) inv.push_back(a);
    out["inversions_outside_levi"] = inv;
  }
  return out;
}

json run_steinberg(const std::string& w_str, const std::string& p_str, const std::string& q_str,
                   const std::optional<std::string>& h_str, bool all_steps) {
  const ParabolicSpec P = blocks_arg(p_str);
  const ParabolicSpec Q = blocks_arg(q_str);
  const MultiPerm w = perm_arg(w_str);
  const CosetRep c(w, P);
  json out{{"coset", c},
           {"q_blocks", Q},
           {"levi_cap_u_in_nQ", levi_cap_u_in_nQ(c.rep(), P, Q)},
           {"z_dimension_defect", z_dimension_defect(c.rep(), P, Q)},
           {"component_in_ZQP_by_roots", component_in_ZQP_by_roots(c, Q)},
           {"shortest_double_coset_rep", shortest_double_coset_rep(c.rep(), Q, P)},
           {"maximal", is_maximal_coset(c)}};
  if (h_str) {
    const IntegralWeight h = weight_arg(*h_str);
    out["h"] = h;
    out["w_h"] = act(c.rep(), h);
    out["component_in_ZQP"] = component_in_ZQP(c, Q, h);
    if (!is_maximal_coset(c)) out["induction_step"] = find_induction_step(c, h);
    if (all_steps) out["all_induction_steps"] = all_induction_steps(c, h);
  } else {
    // Any P-regular antidominant coweight gives the same answer.
    out["component_in_ZQP"] = component_in_ZQP(c, Q, p_regular_witness(P));
  }
  return out;
}

json scenario_header(const Scenario& s) {
  const auto hd = weights_from_hodge(s.h);
  return {{"refinement", s.refinement}, {"h", s.h}, {"lambda", hd.lambda}, {"blocks", hd.P}, {"w_R", s.w_R}};
}

json run_companion(const Scenario& s) {
  json out = scenario_header(s);
  const auto set = companion_set(s.refinement, s.h, s.w_R);
  out["companion_count"] = set.size();
  out["companion_set"] = set;
  out["jordan_holder_w_R"] = jordan_holder_cosets(s.w_R);
  const bool have_values = std::all_of(s.refinement.places().begin(), s.refinement.places().end(),
                                       [](const Place& v) { return v.eigenvalues.has_value(); });
  if (have_values) out["generic"] = genericity_check(s.refinement);
  return out;
}

json run_walk(const Scenario& s) {
  json out = scenario_header(s);
  const auto cert = certify_walk(s.w_R, s.h);
  out["certificate"] = cert;
  out["steps"] = cert.chain.size();
  out["end"] = cert.end();
  return out;
}

int run_ff(FfVerifyRequest r, bool pretty) {
  if (r.override_caps) setenv(kEnumCapOverrideEnv, "1", 1);
  std::vector<std::string> skipped;
  const auto results = run_suite(r.suite, r.n, r.p, r.threads, &skipped);
  const bool pass = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
  json out{{"suite", r.suite}, {"n", r.n}, {"p", r.p}, {"pass", pass}, {"checks", results}, {"skipped", skipped}};
  emit(out, pretty);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-group, Steinberg-variety and companion-point computations"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable text instead of JSON");

  std::string w_str, other_str, blocks_str, q_str, h_str, scenario_path, suite = "all";
  bool list = false, all_steps = false;
  int n = 2, p = 3;
  unsigned threads = 1;

  auto* weyl = app.add_subcommand("weyl", "length, reduced word, inverse, Bruhat comparison");
  weyl->add_option("--w", w_str, "permutation: 1-based one-line list or JSON {label: [...]}")->required();
  auto* other_opt = weyl->add_option("--other", other_str, "second permutation for comparison and product");

  auto* coset = app.add_subcommand("coset", "minimal representatives and lg_P");
  auto* coset_w = coset->add_option("--w", w_str, "permutation");
  coset->add_option("--blocks", blocks_str, "composition of P, e.g. 2,1")->required();
  coset->add_flag("--list", list, "list every coset of W/W_P");

  auto* stein = app.add_subcommand("steinberg", "component criteria for Z_{Q,P}");
  stein->add_option("--w", w_str, "permutation")->required();
  stein->add_option("--blocks", blocks_str, "composition of P")->required();
  stein->add_option("--q-blocks", q_str, "composition of Q")->required();
  auto* h_opt = stein->add_option("--coweight", h_str, "P-regular antidominant coweight h");
  stein->add_flag("--all-steps", all_steps, "list every valid induction step (needs --coweight)");

  auto* comp = app.add_subcommand("companion", "companion characters of a scenario");
  comp->add_option("--scenario", scenario_path, "scenario JSON file")->required();

  auto* walk = app.add_subcommand("walk", "certified saturated chain from w_R to the maximal coset");
  walk->add_option("--scenario", scenario_path, "scenario JSON file")->required();

  auto* ff = app.add_subcommand("ff-verify", "finite-field check suites");
  auto* suite_opt = ff->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  auto* n_opt = ff->add_option("--n", n, "matrix size");
  auto* p_opt = ff->add_option("--p", p, "prime");
  ff->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  auto* ff_scenario = ff->add_option("--scenario", scenario_path, "scenario with an ff_verify section");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (weyl->parsed()) {
      emit(run_weyl(w_str, other_opt->count() ? std::optional(other_str) : std::nullopt), pretty);
    } else if (coset->parsed()) {
      emit(run_coset(coset_w->count() ? std::optional(w_str) : std::nullopt, blocks_str, list || !coset_w->count()),
           pretty);
    } else if (stein->parsed()) {
      emit(run_steinberg(w_str, blocks_str, q_str, h_opt->count() ? std::optional(h_str) : std::nullopt, all_steps),
           pretty);
    } else if (comp->parsed()) {
      emit(run_companion(load_scenario(scenario_path)), pretty);
    } else if (walk->parsed()) {
      emit(run_walk(load_scenario(scenario_path)), pretty);
    } else if (ff->parsed()) {
      FfVerifyRequest r;
      if (ff_scenario->count()) {
        const auto s = load_scenario(scenario_path);
        if (!s.ff_verify) throw ScenarioError("ff_verify", "missing required field");
        r = *s.ff_verify;
      }
      if (suite_opt->count()) r.suite = suite;
      if (n_opt->count()) r.n = n;
      if (p_opt->count()) r.p = p;
      if (threads > 1) r.threads = threads;
      return run_ff(r, pretty);
    }
  } catch (const ScenarioError& e) {
    std::cerr << json{{"error", "invalid scenario"}, {"field", e.field()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
