#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rv/braid.hpp"

namespace rv::selftest {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  SuiteResult() = default;
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}
  bool ok() const { return failures == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240808;

// Signature of the cabling operation; injectable so test fixtures can verify
// that a wrong formula is actually caught by the homomorphism suite.
using CableFn = BraidWord (*)(const BraidWord&, int, int);

// Golden checks (fixed inputs, exact expected outputs).
SuiteResult golden_v32_reduction();
SuiteResult golden_band_split();

// Randomized property suites. `n` scales the number of scenarios.
SuiteResult forest_ops(std::uint64_t seed, int n);
SuiteResult forest_join(std::uint64_t seed, int n);
SuiteResult forest_text(std::uint64_t seed, int n);

SuiteResult braid_word_problem(std::uint64_t seed, int n, int max_strands, int max_len);
SuiteResult braid_permutation(std::uint64_t seed, int n);
SuiteResult braid_cable_hom(std::uint64_t seed, int n, CableFn cable_fn = &cable);
SuiteResult braid_uncable(std::uint64_t seed, int n);
SuiteResult braid_block_twist(std::uint64_t seed, int n);
SuiteResult braid_garside_idem(std::uint64_t seed, int n);

SuiteResult ribbon_group(std::uint64_t seed, int n);
SuiteResult ribbon_semidirect(std::uint64_t seed, int n);
SuiteResult ribbon_split_merge(std::uint64_t seed, int n);
SuiteResult ribbon_split_mult(std::uint64_t seed, int n);
SuiteResult ribbon_oriented(std::uint64_t seed, int n);
SuiteResult ribbon_quotients(std::uint64_t seed, int n);

SuiteResult diagram_axioms(std::uint64_t seed, int n_per_variant);
SuiteResult diagram_confluence(std::uint64_t seed, int n_per_variant);
SuiteResult diagram_reducedness(std::uint64_t seed, int n);
SuiteResult diagram_quotients(std::uint64_t seed, int pairs_per_arrow, int lifts);
SuiteResult diagram_equality(std::uint64_t seed, int pairs_per_variant);
SuiteResult diagram_stability(std::uint64_t seed, int n);
SuiteResult diagram_cantor(std::uint64_t seed, int pairs, int depth);
SuiteResult diagram_separants(std::uint64_t seed, int n);
SuiteResult diagram_random(std::uint64_t seed, int n);

struct Options {
  std::uint64_t seed = kDefaultSeed;
  int scale = 100;       // percentage applied to the default scenario counts
  std::string only;      // when nonempty, run only suites whose name contains it
};

std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace rv::selftest
