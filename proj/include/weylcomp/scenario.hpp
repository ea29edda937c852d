#pragma once

// Scenario files: places with embeddings, Hodge-Tate weights and a refinement,
// plus the relative position w_R given either directly or through the
// ordered parameter weights of the refinement.

#include <optional>
#include <stdexcept>
#include <string>

#include "weylcomp/companion.hpp"

namespace weylcomp {

/// A parse or validation failure; `field` is a JSON path such as places[0].q.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct FfVerifyRequest {
  std::string suite = "all";
  int n = 2;
  int p = 3;
  unsigned threads = 1;
  bool override_caps = false;
};

struct Scenario {
  RefinementSpec refinement;
  /// Antidominant coweight over all embeddings (input sorted ascending).
  IntegralWeight h;
  CosetRep w_R;
  std::optional<FfVerifyRequest> ff_verify;
};

/// Parses and validates. Throws ScenarioError naming the offending field; JSON
/// syntax errors report line and column.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

}  // namespace weylcomp
