#include "rv/diagram.hpp"

#include <cstdint>

#include "doctest.h"
#include "rv/literal.hpp"
#include "rv/rng.hpp"

using namespace rv;

namespace {

const GroupContext V21{2, 1, Variant::Perm};
const GroupContext V32{3, 2, Variant::Perm};
const GroupContext RV21{2, 1, Variant::Ribbon};

// The standard generator A of V = V_{2,1}: prefix map 11->1, 12->21, 2->22.
Diagram make_a() {
  return Diagram(V21, parse_forest("((.,.),.)", 2, 1), Permutation(3),
                 parse_forest("(.,(.,.))", 2, 1));
}

CantorPoint pt(std::vector<int> word) { return CantorPoint{1, std::move(word)}; }

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Diagram(V21, parse_forest("(.,.)", 2, 1), Permutation(3),
                          parse_forest("(.,.)", 2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Diagram(V21, parse_forest(".", 2, 1), BraidWord(1),
                          parse_forest(".", 2, 1)),
                  std::invalid_argument);
  // oriented contexts require even twists
  CHECK_THROWS_AS(Diagram(GroupContext{2, 1, Variant::RibbonOriented},
                          parse_forest(".", 2, 1), RibbonBraid({1}, BraidWord(1)),
                          parse_forest(".", 2, 1)),
                  std::invalid_argument);
}

TEST_CASE("identity") {
  const Diagram e = identity(V21);
  CHECK(e.source() == Forest::trivial(2, 1));
  CHECK(e.leaves() == 1);
  CHECK(reduce(e) == e);
  const Diagram a = make_a();
  CHECK(equals(multiply(identity(V21), a), a));
  CHECK(equals(multiply(a, identity(V21)), a));
}

TEST_CASE("expansion reproduces the unreduced representative") {
  const Diagram reduced(V32, parse_forest("(.,.,.)+(.,.,.)", 3, 2),
                        Permutation({2, 1, 6, 3, 4, 5}),
                        parse_forest("(.,.,.)+(.,.,.)", 3, 2));
  const Diagram top = expand(reduced, 1);
  CHECK(top.source() == parse_forest("((.,.,.),.,.)+(.,.,.)", 3, 2));
  CHECK(top.target() == parse_forest("(.,(.,.,.),.)+(.,.,.)", 3, 2));
  CHECK(std::get<Permutation>(top.decoration()) == Permutation({2, 3, 4, 1, 8, 5, 6, 7}));

  const Diagram e1 = expand(identity(V32), 1);
  CHECK(std::get<Permutation>(e1.decoration()) == Permutation(4));
  CHECK(e1.source() == e1.target());

  // a twisted band gains the block half twist on expansion
  const Diagram tw(RV21, parse_forest(".", 2, 1), RibbonBraid({1}, BraidWord(1)),
                   parse_forest(".", 2, 1));
  const Diagram tws = expand(tw, 1);
  const RibbonBraid& rb = std::get<RibbonBraid>(tws.decoration());
  CHECK(rb.twists() == std::vector<int>{1, 1});
  CHECK(rb.braid() == BraidWord(2, {1}));

  CHECK_THROWS_AS(expand(reduced, 7), std::out_of_range);
}

TEST_CASE("reduction golden") {
  const Diagram top(V32, parse_forest("((.,.,.),.,.)+(.,.,.)", 3, 2),
                    Permutation({2, 3, 4, 1, 8, 5, 6, 7}),
                    parse_forest("(.,(.,.,.),.)+(.,.,.)", 3, 2));
  const Diagram bottom = reduce(top);
  CHECK(bottom.source() == parse_forest("(.,.,.)+(.,.,.)", 3, 2));
  CHECK(bottom.target() == parse_forest("(.,.,.)+(.,.,.)", 3, 2));
  CHECK(std::get<Permutation>(bottom.decoration()) == Permutation({2, 1, 6, 3, 4, 5}));
  CHECK(is_reduced(bottom));
  CHECK(equals(top, bottom));
}

TEST_CASE("ribbon reduction golden") {
  const Diagram split(RV21, parse_forest("(.,.)", 2, 1), RibbonBraid({1, 1}, BraidWord(2, {1})),
                      parse_forest("(.,.)", 2, 1));
  const Diagram red = reduce(split);
  CHECK(red.source() == parse_forest(".", 2, 1));
  CHECK(red.target() == parse_forest(".", 2, 1));
  const RibbonBraid& rb = std::get<RibbonBraid>(red.decoration());
  CHECK(rb.twists() == std::vector<int>{1});
  CHECK(rb.braid().empty());
}

TEST_CASE("reduce after expansion is stable") {
  SplitMix64 rng(41);
  for (int it = 0; it < 60; ++it) {
    const Variant v =
        std::vector<Variant>{Variant::Perm, Variant::Braid, Variant::Ribbon}[rng.below(3)];
    const GroupContext ctx{2 + static_cast<int>(rng.below(2)),
                           1 + static_cast<int>(rng.below(2)), v};
    const Diagram x = random_element(ctx, 2, 3, 2, rng.next());
    const Diagram ex = expand(x, 1 + static_cast<int>(rng.below(x.leaves())));
    CHECK(serialize_diagram(reduce(ex)) == serialize_diagram(reduce(x)));
  }
}

TEST_CASE("squaring the basic generator matches the prefix action") {
  const Diagram a = make_a();
  const Diagram a2 = multiply(a, a);
  CHECK(a2.source() == parse_forest("(((.,.),.),.)", 2, 1));
  CHECK(a2.target() == parse_forest("(.,(.,(.,.)))", 2, 1));
  CHECK(std::get<Permutation>(a2.decoration()) == Permutation(4));

  // every depth-4 point, through the action twice vs once through a^2
  for (int b1 = 1; b1 <= 2; ++b1)
    for (int b2 = 1; b2 <= 2; ++b2)
      for (int b3 = 1; b3 <= 2; ++b3)
        for (int b4 = 1; b4 <= 2; ++b4) {
          const CantorPoint p = pt({b1, b2, b3, b4});
          CHECK(cantor_action(a2, p) == cantor_action(a, cantor_action(a, p)));
        }
}

TEST_CASE("inverse") {
  const Diagram a = make_a();
  CHECK(equals(invert(identity(V21)), identity(V21)));
  CHECK(equals(invert(invert(a)), a));
  CHECK(equals(multiply(a, invert(a)), identity(V21)));

  const Diagram tw(RV21, parse_forest("((.,.),.)", 2, 1),
                   RibbonBraid({1, -2, 0}, BraidWord(3, {1, -2})),
                   parse_forest("(.,(.,.))", 2, 1));
  CHECK(equals(multiply(tw, invert(tw)), identity(RV21)));
  CHECK(equals(multiply(invert(tw), tw), identity(RV21)));
}

TEST_CASE("equality") {
  const Diagram a = make_a();
  CHECK(equals(a, expand(a, 2)));
  CHECK_FALSE(equals(identity(RV21),
                     Diagram(RV21, parse_forest(".", 2, 1), RibbonBraid({1}, BraidWord(1)),
                             parse_forest(".", 2, 1))));
  CHECK_THROWS_AS(equals(identity(RV21), identity(V21)), std::invalid_argument);
}

TEST_CASE("projection arrows") {
  CHECK(equals(project(identity(RV21), Variant::SignedPerm),
               identity(GroupContext{2, 1, Variant::SignedPerm})));

  // one full flip plus a crossing: the signed shadow keeps flips mod 2
  const Diagram tw(RV21, parse_forest("(.,.)", 2, 1), RibbonBraid({1, 1}, BraidWord(2, {1})),
                   parse_forest("(.,.)", 2, 1));
  const Diagram sp = project(tw, Variant::SignedPerm);
  const Diagram expect(GroupContext{2, 1, Variant::SignedPerm}, parse_forest(".", 2, 1),
                       SignedPermutation({1}, Permutation(1)), parse_forest(".", 2, 1));
  CHECK(equals(sp, expect));

  // the invalid forgetful maps must be rejected, not silently computed
  CHECK_THROWS_AS(project(tw, Variant::Braid), std::invalid_argument);
  CHECK_THROWS_AS(project(tw, Variant::Perm), std::invalid_argument);
  CHECK_THROWS_AS(project(identity(GroupContext{2, 1, Variant::SignedPerm}), Variant::Perm),
                  std::invalid_argument);
  CHECK_THROWS_AS(project(identity(V21), Variant::Braid), std::invalid_argument);

  SplitMix64 rng(42);
  for (int it = 0; it < 40; ++it) {
    const GroupContext ctx{2, 2, Variant::Braid};
    const Diagram x = random_element(ctx, 2, 3, 0, rng.next());
    const Diagram y = random_element(ctx, 2, 3, 0, rng.next());
    CHECK(equals(project(multiply(x, y), Variant::Perm),
                 multiply(project(x, Variant::Perm), project(y, Variant::Perm))));
  }
}

TEST_CASE("the rejected forgetful maps really are representative-dependent") {
  // Splitting a half-twisted band inserts a crossing, so two diagrams of the
  // same ribbon element have twist-forgetting shadows that differ in bV;
  // likewise a flip expansion reverses its block, so sign-forgetting shadows
  // differ in V. This is why project() refuses those targets.
  const Diagram rep1(RV21, parse_forest("(.,.)", 2, 1),
                     RibbonBraid({1, 1}, BraidWord(2, {1})), parse_forest("(.,.)", 2, 1));
  const Diagram rep2(RV21, parse_forest(".", 2, 1), RibbonBraid({1}, BraidWord(1)),
                     parse_forest(".", 2, 1));
  REQUIRE(equals(rep1, rep2));
  const GroupContext bv{2, 1, Variant::Braid};
  const Diagram shadow1(bv, rep1.source(), std::get<RibbonBraid>(rep1.decoration()).braid(),
                        rep1.target());
  const Diagram shadow2(bv, rep2.source(), std::get<RibbonBraid>(rep2.decoration()).braid(),
                        rep2.target());
  CHECK_FALSE(equals(shadow1, shadow2));

  const GroupContext v2{2, 1, Variant::SignedPerm};
  const Diagram flip(v2, parse_forest(".", 2, 1), SignedPermutation({1}, Permutation(1)),
                     parse_forest(".", 2, 1));
  const Diagram flip2 = expand(flip, 1);
  REQUIRE(equals(flip, flip2));
  const Diagram pshadow1(V21, flip.source(), std::get<SignedPermutation>(flip.decoration()).perm(),
                         flip.target());
  const Diagram pshadow2(V21, flip2.source(),
                         std::get<SignedPermutation>(flip2.decoration()).perm(), flip2.target());
  CHECK_FALSE(equals(pshadow1, pshadow2));
}

TEST_CASE("lift is a section") {
  CHECK(equals(lift(identity(V21), Variant::Braid),
               identity(GroupContext{2, 1, Variant::Braid})));
  SplitMix64 rng(43);
  for (int it = 0; it < 40; ++it) {
    const Diagram v = random_element(V32, 2, 0, 0, rng.next());
    CHECK(equals(project(lift(v, Variant::Braid), Variant::Perm), v));
    CHECK(equals(project(lift(v, Variant::RibbonOriented), Variant::Perm), v));
  }
  // writhe of the lift = inversion count of the permutation
  const Diagram v(V21, parse_forest("(.,.)", 2, 1), Permutation({2, 1}),
                  parse_forest("(.,.)", 2, 1));
  CHECK(writhe(lift(v, Variant::Braid)) == 1);
  const Diagram w(V32, parse_forest("(.,.,.)+.", 3, 2), Permutation({4, 3, 2, 1}),
                  parse_forest(".+(.,.,.)", 3, 2));
  CHECK(writhe(lift(w, Variant::Braid)) == Permutation({4, 3, 2, 1}).inversions());
}

TEST_CASE("stabilization") {
  CHECK(equals(stabilize(identity(V21)), identity(GroupContext{2, 2, Variant::Perm})));
  SplitMix64 rng(44);
  for (int it = 0; it < 30; ++it) {
    const Diagram x = random_element(RV21, 2, 3, 2, rng.next());
    const Diagram y = random_element(RV21, 2, 3, 2, rng.next());
    CHECK(equals(stabilize(multiply(x, y)), multiply(stabilize(x), stabilize(y))));
    CHECK(equals(stabilize(x), stabilize(y)) == equals(x, y));
  }
  const GroupContext orv{2, 1, Variant::RibbonOriented};
  const Diagram ox = random_element(orv, 2, 3, 1, 5);
  CHECK(stabilize(ox).context().variant == Variant::RibbonOriented);
}

TEST_CASE("shift isomorphism") {
  CHECK(equals(shift_iso(identity(V21)), identity(GroupContext{2, 2, Variant::Perm})));
  CHECK(equals(shift_iso(identity(GroupContext{3, 2, Variant::Perm})),
               identity(GroupContext{3, 4, Variant::Perm})));
  SplitMix64 rng(45);
  for (int it = 0; it < 30; ++it) {
    const GroupContext ctx{2 + static_cast<int>(it % 2), 1 + static_cast<int>(rng.below(2)),
                           Variant::Ribbon};
    const Diagram x = random_element(ctx, 2, 3, 2, rng.next());
    const Diagram y = random_element(ctx, 2, 3, 2, rng.next());
    CHECK(equals(shift_iso_inverse(shift_iso(x)), x));
    CHECK(equals(shift_iso(multiply(x, y)), multiply(shift_iso(x), shift_iso(y))));
  }
  CHECK_THROWS_AS(shift_iso_inverse(identity(GroupContext{3, 2, Variant::Perm})),
                  std::invalid_argument);
}

TEST_CASE("random elements are reproducible") {
  const Diagram a = random_element(RV21, 3, 5, 2, 1);
  const Diagram b = random_element(RV21, 3, 5, 2, 1);
  CHECK(serialize_diagram(a) == serialize_diagram(b));
  CHECK(serialize_diagram(a) ==
        "RV{2,1}(((.,.),(.,.))|t:-2,1,-2,-2;b:-1,-2,-3,-1,-2,-1,1,3,1,2,3,2,3|(.,(.,(.,.))))");
  CHECK(serialize_diagram(random_element(V21, 3, 5, 0, 1)) ==
        "V{2,1}(((.,.),(.,.))|p:4,3,1,2|(.,(.,(.,.))))");
  for (Variant v : {Variant::Perm, Variant::SignedPerm, Variant::Braid, Variant::Ribbon,
                    Variant::RibbonOriented}) {
    const GroupContext one{2, 1, v};
    CHECK(equals(random_element(one, 0, 0, 0, 77), identity(one)));
  }
}

TEST_CASE("random elements regenerate from an independent generator") {
  // Second implementation of the PRNG, written from the stated recurrence.
  struct IndependentMix {
    std::uint64_t s;
    std::uint64_t operator()() {
      s += 0x9E3779B97F4A7C15ull;
      std::uint64_t z = s;
      z ^= z >> 30;
      z *= 0xBF58476D1CE4E5B9ull;
      z ^= z >> 27;
      z *= 0x94D049BB133111EBull;
      z ^= z >> 31;
      return z;
    }
  };
  SplitMix64 lib(123);
  IndependentMix mine{123};
  for (int i = 0; i < 1000; ++i) CHECK(lib.next() == mine());

  // Rebuild the seed=1 corpus element of V_{2,1} (k=3 splits per forest,
  // then a Fisher-Yates shuffle) following the documented draw order.
  IndependentMix draw{1};
  Forest fm = Forest::trivial(2, 1);
  for (int k = 0; k < 3; ++k)
    fm = fm.split_leaf(1 + static_cast<int>(draw() % fm.leaf_count()));
  Forest fp = Forest::trivial(2, 1);
  for (int k = 0; k < 3; ++k)
    fp = fp.split_leaf(1 + static_cast<int>(draw() % fp.leaf_count()));
  std::vector<int> img = {1, 2, 3, 4};
  for (int i = 4; i >= 2; --i) {
    const int j = 1 + static_cast<int>(draw() % i);
    std::swap(img[i - 1], img[j - 1]);
  }
  const Diagram rebuilt =
      reduce(Diagram(V21, fm, Permutation(img), fp));
  CHECK(serialize_diagram(rebuilt) == serialize_diagram(random_element(V21, 3, 5, 0, 1)));
}

TEST_CASE("prefix action") {
  const Diagram a = make_a();
  CHECK(cantor_action(identity(V21), pt({1, 2, 1})) == pt({1, 2, 1}));
  CHECK(cantor_action(a, pt({1, 1, 2})) == pt({1, 2}));
  CHECK(cantor_action(a, pt({1, 2, 2})) == pt({2, 1, 2}));
  CHECK(cantor_action(a, pt({2, 1})) == pt({2, 2, 1}));
  CHECK_THROWS_AS(cantor_action(a, pt({1})), std::invalid_argument);
  CHECK_THROWS_AS(cantor_action(a, pt({3, 1})), std::invalid_argument);

  // flips reverse the tail beyond the replaced prefix
  const GroupContext v2{2, 1, Variant::SignedPerm};
  const Diagram flip(v2, parse_forest(".", 2, 1), SignedPermutation({1}, Permutation(1)),
                     parse_forest(".", 2, 1));
  CHECK(cantor_action(flip, pt({1, 2, 2})) == pt({2, 1, 1}));
  CHECK_THROWS_AS(cantor_action(identity(RV21), pt({1, 1})), std::invalid_argument);
}

TEST_CASE("class separants") {
  const Diagram tw(RV21, parse_forest(".", 2, 1), RibbonBraid({3}, BraidWord(1)),
                   parse_forest(".", 2, 1));
  CHECK(total_twist(tw) == 3);
  CHECK(total_twist(expand(tw, 1)) == 3);
  CHECK(writhe(expand(tw, 1)) == 0);
  CHECK(underlying_permutation(expand(expand(tw, 1), 1)) == Permutation(1));
}

TEST_CASE("oriented subgroup is preserved") {
  const GroupContext orv{2, 1, Variant::RibbonOriented};
  SplitMix64 rng(46);
  for (int it = 0; it < 20; ++it) {
    const Diagram x = random_element(orv, 2, 3, 1, rng.next());
    const Diagram y = random_element(orv, 2, 3, 1, rng.next());
    const Diagram xy = multiply(x, y);
    CHECK(is_oriented(std::get<RibbonBraid>(xy.decoration())));
    CHECK(is_oriented(std::get<RibbonBraid>(invert(x).decoration())));
    CHECK(is_oriented(std::get<RibbonBraid>(reduce(expand(x, 1)).decoration())));
  }
}

TEST_SUITE_END();
