#ifndef DTL_VERIFY_HPP
#define DTL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtl/cycle.hpp"

namespace dtl {

// Fuzz envelope and resource bounds for the verification suites.
struct FuzzConfig {
  std::uint64_t seed = 42;
  std::uint32_t trials = 200;
  std::uint32_t max_degree = 3;
  std::uint32_t max_vars = 4;
  std::uint32_t max_terms = 4;
  std::uint32_t coeff_bound = 9;
  std::uint64_t term_cap = kDefaultTermCap;

  void validate() const;
};

enum class Suite {
  BiadditivityLeft,
  BiadditivityRight,
  LinearLemma,
  FastPath,
  Stabilization,
  Degree,
  Chern,
};

// Names as the CLI accepts them: biadditivity-left, ..., chern, all.
std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);
const std::vector<Suite>& all_suites();

struct SuiteResult {
  Suite suite;
  std::uint32_t passed = 0;
  std::uint32_t failed = 0;
  // Draws discarded because an expansion hit the term cap; such cases are
  // redrawn so exactly `trials` verifications run.
  std::uint32_t oversize_redraws = 0;
  std::string first_counterexample;  // empty when failed == 0

  bool ok() const { return failed == 0; }
  // Deterministic report: identical seed and config give identical bytes.
  std::string report(const FuzzConfig& config) const;
};

SuiteResult run_suite(Suite suite, const FuzzConfig& config);

// Deterministic generators used by the suites and by round-trip tests.
class FuzzGen {
 public:
  explicit FuzzGen(const FuzzConfig& config) : config_(config), rng_(config.seed) {}

  std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi);
  mpz_class coefficient();             // nonzero, in [-bound, bound]
  mpz_class multiplicity();            // nonzero, in [-3, 3]
  VariableSpace space(Family family);  // bound in [1, max_vars]
  // Nonzero homogeneous polynomial of the given degree.
  Polynomial polynomial(const VariableSpace& space, std::uint32_t degree);
  Polynomial polynomial(Family family);  // random space and degree
  Cycle cycle(const VariableSpace& space, std::uint32_t max_components = 3);

 private:
  FuzzConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace dtl

#endif
