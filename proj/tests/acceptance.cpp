// Acceptance suite: runs each criterion at its stated size and time budget
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rv/selftest.hpp"

namespace {

namespace st = rv::selftest;

struct Criterion {
  std::string name;
  double budget_seconds;
  std::vector<st::SuiteResult> results;
  double elapsed = 0.0;
};

bool run_criterion(Criterion& c, const std::vector<std::function<st::SuiteResult()>>& parts) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& part : parts) c.results.push_back(part());
  c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = c.elapsed <= c.budget_seconds;
  long cases = 0;
  for (const auto& r : c.results) {
    cases += r.cases;
    if (!r.ok()) ok = false;
  }
  std::printf("%s  %-30s  %6ld cases  %7.2fs (budget %.0fs)\n", ok ? "PASS" : "FAIL",
              c.name.c_str(), cases, c.elapsed, c.budget_seconds);
  for (const auto& r : c.results)
    for (const auto& note : r.notes) std::printf("      %s: %s\n", r.name.c_str(), note.c_str());
  return ok;
}

}  // namespace

int main() {
  const std::uint64_t seed = st::kDefaultSeed;
  bool all_ok = true;
  int index = 0;
  auto criterion = [&](const std::string& name, double budget,
                       std::vector<std::function<st::SuiteResult()>> parts) {
    Criterion c{std::to_string(++index) + " " + name, budget, {}, 0.0};
    if (!run_criterion(c, parts)) all_ok = false;
  };

  criterion("v32 reduction golden", 1.0, {[] { return st::golden_v32_reduction(); }});
  criterion("band split golden", 1.0, {[] { return st::golden_band_split(); }});
  criterion("group axioms (5 variants)", 60.0,
            {[=] { return st::diagram_axioms(seed + 1, 200); }});
  criterion("confluence of reduction", 60.0,
            {[=] { return st::diagram_confluence(seed + 2, 200); }});
  criterion("quotients and sections", 60.0,
            {[=] { return st::diagram_quotients(seed + 3, 200, 100); }});
  criterion("stability maps", 60.0, {[=] { return st::diagram_stability(seed + 4, 200); }});
  criterion("braid word-problem oracle", 120.0,
            {[=] { return st::braid_word_problem(seed + 5, 500, 8, 40); }});
  criterion("prefix-action oracle", 30.0,
            {[=] { return st::diagram_cantor(seed + 6, 100, 12); }});
  criterion("cabling and band splitting", 60.0,
            {[=] { return st::braid_cable_hom(seed + 7, 200); },
             [=] { return st::braid_uncable(seed + 8, 200); },
             [=] { return st::ribbon_split_mult(seed + 9, 200); }});

  // the complete selftest, default seed, must finish within five minutes
  {
    const auto start = std::chrono::steady_clock::now();
    st::Options opt;
    const auto results = st::run_all(opt);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = elapsed <= 300.0;
    long failed = 0;
    for (const auto& r : results)
      if (!r.ok()) ++failed;
    if (failed > 0) ok = false;
    std::printf("%s  %-30s  %6zu suites  %7.2fs (budget 300s)\n", ok ? "PASS" : "FAIL",
                "10 full selftest", results.size(), elapsed);
    if (!ok) all_ok = false;
  }

  std::printf(all_ok ? "acceptance: all criteria passed\n"
                     : "acceptance: FAILURES present\n");
  return all_ok ? 0 : 1;
}
