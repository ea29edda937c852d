#pragma once

// Exhaustive point counts over F_p for flag varieties and the incidence
// conditions Ad(g^{-1}) nu in b / p / u / n_Q, single embedding.
//
// Points of G/B are represented by u w' with w' the permutation matrix of w
// and u in U with free entries exactly at (a, b), a < b, w^{-1}(a) > w^{-1}(b).
// Points of G/P use the same form with w in W^P.

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weylcomp/finite_field.hpp"
#include "weylcomp/parabolic.hpp"

namespace weylcomp {

/// Name of the environment variable that lifts the enumeration caps.
inline constexpr const char* kEnumCapOverrideEnv = "WEYLCOMP_ENUM_CAP_OVERRIDE";

/// Throws std::out_of_range unless n <= 4, p in {2,3,5,7} and (n < 4 or p <= 3).
/// With the override variable set, only primality is enforced and a warning
/// is printed to stderr.
void check_enumeration_caps(int n, int p);

struct FlagPoint {
  Perm cell;
  std::vector<int> cell_coords;
  FqMatrix matrix;
};

/// The free coordinates (a, b) of the cell of w, in row-major order.
std::vector<std::pair<int, int>> cell_coordinates(const Perm& w);

/// Points of the cell B w B / B (or B w P / P for w in W^P).
std::vector<FlagPoint> enumerate_cell(const Perm& w, int p);
/// All points of G/B, cells in lexicographic order.
std::vector<FlagPoint> enumerate_flags(int n, int p);
/// All points of G/P, one per cell of W^P.
std::vector<FlagPoint> enumerate_partial_flags(const std::vector<int>& blocks, int p);

/// r(i, j) = rank of rows i..n-1, columns 0..j.
std::vector<std::vector<int>> lower_left_ranks(const FqMatrix& g);
/// The w with g in B w B. Throws std::invalid_argument for singular g.
Perm bruhat_cell_of(const FqMatrix& g);

/// Every element of b (upper triangular) over F_p.
std::vector<FqMatrix> borel_algebra(int n, int p);

enum class ConditionKind { in_b, in_p, in_u, in_nQ };

struct IncidenceCondition {
  ConditionKind kind = ConditionKind::in_b;
  std::vector<int> blocks;  // composition for in_p / in_nQ

  bool holds(const FqMatrix& x) const;
};

struct IncidenceSpace {
  bool partial = false;
  std::vector<int> blocks;  // for partial flags
};

struct IncidenceResult {
  long long count = 0;
  std::map<Perm, long long> per_cell;
  std::vector<FqMatrix> witnesses;  // at most max_witnesses
};

/// Points g of the space with Ad(g^{-1}) nu satisfying the condition.
/// On partial flags only conditions stable under P (in_p or in_nQ for the
/// same blocks) are well defined; others throw std::invalid_argument.
IncidenceResult incidence_count(const FqMatrix& nu, const IncidenceCondition& condition,
                                const IncidenceSpace& space, std::size_t max_witnesses = 0);

struct CheckResult {
  std::string check;
  nlohmann::json params;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
};

void to_json(nlohmann::json& j, const CheckResult& r);

/// Point count of G/B against the q-factorial and |GL_n| / |B|.
CheckResult flag_count_check(int n, int p);

/// Cell of every flag point and of b1 g b2 for sampled Borel elements.
CheckResult bruhat_cell_check(int n, int p, unsigned seed = 1);

/// For every pair (g1 B, g2 P) with g1^{-1} g2 in B w P, counts nu with
/// Ad(g1^{-1}) nu in b and Ad(g2^{-1}) nu in p. Expected p^{dim b - lg_P(w)}.
/// observed holds the histogram {count: pairs}.
CheckResult fiber_dimension_check(const CosetRep& w, int p, unsigned threads = 1);

/// n = 2: Ad(u_-(x))^{-1} b in b iff 2xt + x^2 y = 0, for b = t diag(1,-1) + c I + y E_12.
/// Also checks that for t, y != 0 the only nonzero root is x = -2t/y.
/// Throws std::invalid_argument for p = 2.
CheckResult blowup_equation_check(int p);

/// Characteristic polynomials of the Levi blocks of Ad(g2^{-1}) nu against the
/// w-permuted diagonal of Ad(g1^{-1}) nu, at every F_p-point of V_{P,w}.
CheckResult weight_map_check(const CosetRep& w, int p, unsigned threads = 1);

/// For all nu in b(F_p): Ad(w'^{-1}) nu in p iff in b; true exactly when w in W^P.
/// observed is whether the equivalence held for every nu.
bool shortest_element_equivalence_holds(const Perm& w, const std::vector<int>& blocks, int p);
CheckResult shortest_element_check(int n, int p);

/// Split regular semisimple nu (distinct diagonal, conjugated by g) has
/// exactly |W/W_P| incident partial flags, for every composition.
CheckResult regular_semisimple_check(int n, int p, unsigned seed = 1);

/// x in closure(B w P) by rank conditions iff cell(x) <= w in W/W_P, for all
/// partial flag points x and all w in W^P.
CheckResult cell_closure_check(const std::vector<int>& blocks, int p);

/// Good form over F_p on random upper-triangular matrices.
CheckResult good_form_check(int n, int p, int samples, unsigned seed = 1);

/// Over nu = 0 every point of G/B and of every G/P is incident.
CheckResult zero_incidence_check(int n, int p);

/// Runs the named suite ("all" or one check family) over every composition of n.
/// Checks whose preconditions fail for (n, p) are skipped and listed in `skipped`.
std::vector<CheckResult> run_suite(const std::string& suite, int n, int p, unsigned threads,
                                   std::vector<std::string>* skipped = nullptr);

std::vector<std::string> suite_names();

}  // namespace weylcomp
