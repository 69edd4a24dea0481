#include "rv/selftest.hpp"

#include <cstdlib>

#include "doctest.h"

using namespace rv;
namespace st = rv::selftest;

namespace {

// Cable formula with the emitted crossing signs flipped when the block
// crosses under its right neighbour. The homomorphism suite must notice.
BraidWord broken_cable(const BraidWord& w, int i, int d) {
  const int l = w.strands();
  int c = i;
  std::vector<int> out;
  for (int g : w.letters()) {
    const int q = std::abs(g);
    const int sg = g > 0 ? 1 : -1;
    if (q < c - 1) {
      out.push_back(g);
    } else if (q > c) {
      out.push_back(sg * (q + d - 1));
    } else if (q == c - 1) {
      for (int k = c - 1; k <= c + d - 2; ++k) out.push_back(sg * k);
      c -= 1;
    } else {
      for (int k = c + d - 1; k >= c; --k) out.push_back(-sg * k);  // wrong sign
      c += 1;
    }
  }
  return BraidWord(l + d - 1, std::move(out));
}

}  // namespace

TEST_SUITE_BEGIN("selftest");

TEST_CASE("goldens pass") {
  CHECK(st::golden_v32_reduction().ok());
  CHECK(st::golden_band_split().ok());
}

TEST_CASE("suites are deterministic in the seed") {
  const auto a = st::braid_word_problem(5, 40, 6, 20);
  const auto b = st::braid_word_problem(5, 40, 6, 20);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
  CHECK(a.ok());
}

TEST_CASE("sampled suites pass at small scale") {
  CHECK(st::forest_ops(11, 40).ok());
  CHECK(st::ribbon_split_merge(12, 40).ok());
  CHECK(st::diagram_axioms(13, 8).ok());
  CHECK(st::diagram_quotients(14, 10, 10).ok());
  CHECK(st::diagram_cantor(15, 10, 12).ok());
}

TEST_CASE("an injected cable defect is caught") {
  const auto broken = st::braid_cable_hom(16, 60, &broken_cable);
  CHECK(broken.failures > 0);
  const auto good = st::braid_cable_hom(16, 60);
  CHECK(good.ok());
}

TEST_CASE("run_all respects the filter") {
  st::Options opt;
  opt.scale = 5;
  opt.only = "golden";
  const auto results = st::run_all(opt);
  CHECK(results.size() == 2);
  for (const auto& r : results) CHECK(r.ok());
}

TEST_SUITE_END();
