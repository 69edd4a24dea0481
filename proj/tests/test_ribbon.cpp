#include "rv/ribbon.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rv/rng.hpp"

using namespace rv;

namespace {

bool rb_eq(const RibbonBraid& a, const RibbonBraid& b) {
  return a.twists() == b.twists() && equal(a.braid(), b.braid());
}

RibbonBraid random_rb(SplitMix64& rng, int l, int len, int bound) {
  std::vector<int> t(l);
  for (int& v : t) v = static_cast<int>(rng.below(2 * bound + 1)) - bound;
  std::vector<int> letters;
  if (l >= 2)
    for (int k = 0; k < len; ++k) {
      const int q = 1 + static_cast<int>(rng.below(l - 1));
      letters.push_back(rng.below(2) == 0 ? q : -q);
    }
  return RibbonBraid(std::move(t), BraidWord(l, std::move(letters)));
}

}  // namespace

TEST_SUITE_BEGIN("ribbon");

TEST_CASE("validation") {
  CHECK_THROWS_AS(RibbonBraid({1, 2}, BraidWord(3)), std::invalid_argument);
  CHECK(RibbonBraid::identity(3).bands() == 3);
}

TEST_CASE("semidirect product") {
  // Twists ride along the bands of the left factor.
  const RibbonBraid a({1, 0}, BraidWord(2, {1}));
  const RibbonBraid b({0, 0}, BraidWord(2, {-1}));
  const RibbonBraid ab = rb_multiply(a, b);
  CHECK(ab.twists() == std::vector<int>{1, 0});
  CHECK(is_trivial(ab.braid()));

  const RibbonBraid e = RibbonBraid::identity(2);
  CHECK(rb_eq(rb_multiply(a, e), a));
  CHECK(rb_eq(rb_multiply(e, a), a));

  const RibbonBraid x({2}, BraidWord(1));
  const RibbonBraid y({3}, BraidWord(1));
  CHECK(rb_multiply(x, y).twists() == std::vector<int>{5});

  CHECK_THROWS_AS(rb_multiply(x, a), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(rb_eq(rb_invert(RibbonBraid::identity(3)), RibbonBraid::identity(3)));
  const RibbonBraid a({1, 0}, BraidWord(2, {1}));
  const RibbonBraid ainv = rb_invert(a);
  CHECK(ainv.twists() == std::vector<int>{0, -1});
  CHECK(ainv.braid() == BraidWord(2, {-1}));
  CHECK(rb_eq(rb_multiply(a, ainv), RibbonBraid::identity(2)));
  CHECK(rb_eq(rb_multiply(ainv, a), RibbonBraid::identity(2)));
  CHECK(rb_eq(rb_invert(rb_invert(a)), a));
}

TEST_CASE("orientation") {
  CHECK(is_oriented(RibbonBraid::identity(2)));
  CHECK_FALSE(is_oriented(RibbonBraid({1}, BraidWord(1))));
  CHECK(is_oriented(RibbonBraid({2, -4}, BraidWord(2, {1}))));
  SplitMix64 rng(31);
  for (int it = 0; it < 50; ++it) {
    RibbonBraid x = random_rb(rng, 3, 5, 2);
    RibbonBraid y = random_rb(rng, 3, 5, 2);
    if (is_oriented(x) && is_oriented(y)) {
      CHECK(is_oriented(rb_multiply(x, y)));
      CHECK(is_oriented(rb_invert(x)));
    }
  }
}

TEST_CASE("band splitting") {
  // A half-twisted band splits into two half-twisted bands braided by one
  // positive crossing.
  const RibbonBraid half({1}, BraidWord(1));
  const RibbonBraid split = split_band(half, 1, 2);
  CHECK(split.twists() == std::vector<int>{1, 1});
  CHECK(split.braid() == BraidWord(2, {1}));

  // Zero twist: splitting is plain cabling.
  const RibbonBraid flat({0, 0}, BraidWord(2, {1}));
  const RibbonBraid fsplit = split_band(flat, 2, 2);
  CHECK(fsplit.twists() == std::vector<int>{0, 0, 0});
  CHECK(fsplit.braid() == cable(BraidWord(2, {1}), 2, 2));

  // A full twist splits into a full inter-band twist.
  const RibbonBraid full({2}, BraidWord(1));
  const RibbonBraid fullsplit = split_band(full, 1, 2);
  CHECK(fullsplit.twists() == std::vector<int>{2, 2});
  CHECK(equal(fullsplit.braid(), BraidWord(2, {1, 1})));
}

TEST_CASE("band merging") {
  const RibbonBraid half({1}, BraidWord(1));
  const RibbonBraid split({1, 1}, BraidWord(2, {1}));
  auto merged = try_merge_band(split, 1, 2, 1);
  REQUIRE(merged);
  CHECK(rb_eq(*merged, half));

  CHECK_FALSE(try_merge_band(RibbonBraid({0, 1}, BraidWord(2)), 1, 2, 1));
  CHECK_FALSE(try_merge_band(RibbonBraid({0, 0}, BraidWord(2, {1, 1})), 1, 2, 1));
  CHECK_THROWS_AS(try_merge_band(half, 1, 2, 1), std::out_of_range);

  SplitMix64 rng(32);
  for (int it = 0; it < 100; ++it) {
    const int l = 1 + static_cast<int>(rng.below(4));
    const int d = 2 + static_cast<int>(rng.below(2));
    const int p = 1 + static_cast<int>(rng.below(l));
    const RibbonBraid x = random_rb(rng, l, static_cast<int>(rng.below(8)), 2);
    const RibbonBraid s = split_band(x, p, d);
    auto back = try_merge_band(s, p, d, permutation_of(x.braid())(p));
    REQUIRE(back);
    CHECK(rb_eq(*back, x));
  }
}

TEST_CASE("projections are homomorphisms") {
  CHECK(project_to_signed(RibbonBraid::identity(3)) == SignedPermutation::identity(3));
  const RibbonBraid a({3, 0}, BraidWord(2, {1}));
  const SignedPermutation sp = project_to_signed(a);
  CHECK(sp.signs() == std::vector<int>{1, 0});
  CHECK(sp.perm() == Permutation({2, 1}));

  SplitMix64 rng(33);
  for (int it = 0; it < 100; ++it) {
    const int l = 1 + static_cast<int>(rng.below(5));
    const RibbonBraid x = random_rb(rng, l, static_cast<int>(rng.below(8)), 3);
    const RibbonBraid y = random_rb(rng, l, static_cast<int>(rng.below(8)), 3);
    const RibbonBraid xy = rb_multiply(x, y);
    CHECK(project_to_signed(xy) == sp_multiply(project_to_signed(x), project_to_signed(y)));
    CHECK(project_to_perm(xy) == project_to_perm(x).then(project_to_perm(y)));
    CHECK(equal(project_to_braid(xy), multiply(project_to_braid(x), project_to_braid(y))));
    CHECK(total_twist(xy) == total_twist(x) + total_twist(y));
    CHECK(writhe(xy) == writhe(x) + writhe(y));
  }
}

TEST_CASE("separants") {
  CHECK(total_twist(RibbonBraid::identity(4)) == 0);
  CHECK(writhe(RibbonBraid::identity(4)) == 0);
  const RibbonBraid a({1, 1}, BraidWord(2, {1}));
  CHECK(total_twist(a) == 2);
  CHECK(writhe(a) == 1);
}

TEST_CASE("signed permutations") {
  const SignedPermutation a({1, 0}, Permutation({2, 1}));
  const SignedPermutation b({1, 1}, Permutation({1, 2}));
  // flips compose through the permutation of the left factor
  const SignedPermutation ab = sp_multiply(a, b);
  CHECK(ab.perm() == Permutation({2, 1}));
  CHECK(ab.signs() == std::vector<int>{0, 1});
  CHECK(sp_multiply(a, sp_invert(a)) == SignedPermutation::identity(2));
  CHECK(sp_multiply(sp_invert(a), a) == SignedPermutation::identity(2));
  CHECK_THROWS_AS(SignedPermutation({2, 0}, Permutation(2)), std::invalid_argument);
}

TEST_SUITE_END();
