#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starq/geometry.hpp"
#include "starq/rational.hpp"
#include "starq/symbol.hpp"

namespace starq {

/// Configuration shared by the verification suites and the CLI.
struct RunConfig {
  int n = 1;
  GeometryKind geometry = GeometryKind::Projective;
  int p = 0, q = 0;  // conformal signature; p + q must equal n
  Rational lambda = half();
  int max_deg = 3;   // degree bound for random symbols
  int x_bound = 3;   // operator-table bounds
  int xi_bound = 4;
  int nu_bound = 0;
  int r_max = 3;
  std::uint64_t seed = 1;
  int cases = 25;    // randomized repetitions per check
};

struct CheckResult {
  std::string name;
  std::string identity;  // the verified identity, in ASCII
  bool pass = true;
  std::string witness;   // counterexample description when failing
};

/// Deterministic splitmix64 generator. Identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  int uniform(int lo, int hi);
  Rational rational(int max_num = 5, int max_den = 3);
  Symbol symbol(int n, int max_x, int max_xi, int max_nu, int max_terms = 4);

 private:
  std::uint64_t state_;
};

/// Seed for a named check, derived from the run seed and the check name.
std::uint64_t check_seed(std::uint64_t run_seed, const std::string& name);

std::vector<std::string> suite_names();  // excludes "all"
bool is_suite(const std::string& s);

/// Runs one suite (or "all"); checks execute concurrently and results come
/// back sorted by name.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const RunConfig& cfg);

std::string report_json(const std::string& suite, const RunConfig& cfg,
                        const std::vector<CheckResult>& results);
std::string report_text(const std::string& suite, const RunConfig& cfg,
                        const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

/// Seed-instantiation filter for the printed inversion recursions: the
/// instantiation at (alpha, beta, gamma, delta) is a consequence of
/// invariance only when the identified contraction monomial acts
/// nontrivially on the (k, l) block.
bool inversion_seed_admissible(int which, int k, int l,
                               const std::array<int, 4>& seed);

}  // namespace starq
