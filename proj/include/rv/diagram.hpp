#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "rv/braid.hpp"
#include "rv/forest.hpp"
#include "rv/perm.hpp"
#include "rv/ribbon.hpp"

namespace rv {

// Which of the five groups a diagram lives in. Perm is V_{d,r},
// SignedPerm is V_{d,r}(Z/2Z), Braid is bV_{d,r}, Ribbon is RV_{d,r} and
// RibbonOriented is RV+_{d,r} (all twists even).
enum class Variant { Perm, SignedPerm, Braid, Ribbon, RibbonOriented };

struct GroupContext {
  int d = 2;
  int r = 1;
  Variant variant = Variant::Perm;
  bool operator==(const GroupContext&) const = default;
};

// Leaf-matching data between the two forests of a diagram.
using Decoration = std::variant<Permutation, SignedPermutation, BraidWord, RibbonBraid>;

int dec_size(const Decoration& dec);
Decoration dec_identity(Variant v, int l);
Decoration dec_compose(const Decoration& x, const Decoration& y);  // left to right
Decoration dec_invert(const Decoration& x);
int dec_target_of(const Decoration& dec, int p);
Permutation dec_permutation(const Decoration& dec);

// Expansion of the decoration when source leaf p and target leaf q split
// into d; q must be dec_target_of(dec, p).
Decoration dec_split_at(const Decoration& dec, int p, int q, int d);

// Inverse of dec_split_at; empty when the decoration is not a split at
// (p, q, d).
std::optional<Decoration> dec_try_merge_at(const Decoration& dec, int p, int q, int d);

// Equality of canonical forms (permutations directly, braid parts through
// the Garside form).
bool dec_canonical_equal(const Decoration& a, const Decoration& b);

// A paired forest diagram (F_-, decoration, F_+). Group elements are
// equivalence classes of diagrams under reduction/expansion; reduce()
// computes the canonical (fully reduced) representative.
class Diagram {
 public:
  Diagram(GroupContext ctx, Forest source, Decoration dec, Forest target);

  const GroupContext& context() const { return ctx_; }
  const Forest& source() const { return source_; }
  const Forest& target() const { return target_; }
  const Decoration& decoration() const { return dec_; }
  int leaves() const { return dec_size(dec_); }

  bool operator==(const Diagram&) const;  // syntactic (same representative)

 private:
  GroupContext ctx_;
  Forest source_;
  Decoration dec_;
  Forest target_;
  bool reduced_hint_ = false;

  friend Diagram reduce(const Diagram& x);
  friend bool is_reduced(const Diagram& x);
};

Diagram identity(const GroupContext& ctx);

// Splits source leaf i and the matched target leaf; the result represents
// the same group element.
Diagram expand(const Diagram& x, int i);

// Splits target leaf j (and the matched source leaf).
Diagram expand_target(const Diagram& x, int j);

// Canonical representative: merges matched elementary caret pairs until none
// applies, scanning by first leaf ascending and restarting after each merge.
Diagram reduce(const Diagram& x);
bool is_reduced(const Diagram& x);

Diagram multiply(const Diagram& x, const Diagram& y);
Diagram invert(const Diagram& x);
bool equals(const Diagram& x, const Diagram& y);

// Quotient homomorphisms between variants. The arrows that exist are
// Ribbon -> SignedPerm (twists mod 2), RibbonOriented -> Perm and
// Braid -> Perm (underlying permutation); throws on any other pair. The
// remaining forgetful maps are not constant on equivalence classes (band
// splitting braids the block by Delta^t, a set flip reverses it), so they
// do not define maps of groups.
Diagram project(const Diagram& x, Variant target);

// Section of the projection to Perm: same forests, zero twists, and the
// minimal-crossing positive permutation braid realizing the permutation.
// Not a homomorphism; project(lift(v, t), Perm) == v.
Diagram lift(const Diagram& v, Variant target);

// Injective homomorphism into the r+1 group: appends a trivial root to both
// forests and a fixed, untwisted last strand to the decoration.
Diagram stabilize(const Diagram& x);

// The canonical isomorphism between the r and r+d-1 groups: pass to the
// representative carrying a caret at root 1 on both sides, then reinterpret
// that caret's d subtrees as d separate roots. shift_iso_inverse re-wraps
// roots 1..d under a caret. Mutually inverse group isomorphisms.
Diagram shift_iso(const Diagram& x);
Diagram shift_iso_inverse(const Diagram& x);

// Deterministic seeded element: k random leaf splits per forest, decoration
// drawn uniformly within bounds, reduced. The PRNG is SplitMix64 and the
// draw order is fixed, so corpora reproduce across implementations.
Diagram random_element(const GroupContext& ctx, int carets, int braid_len, int twist_bound,
                       std::uint64_t seed);

// A point of the boundary Cantor set, addressed as a root index plus a
// finite word over {1..d}.
struct CantorPoint {
  int root = 1;
  std::vector<int> word;
  bool operator==(const CantorPoint&) const = default;
};

// Prefix-replacement action (Perm and SignedPerm only): the leaf of F_-
// whose cylinder contains the point has its address replaced by the matched
// leaf address in F_+; a set flip reverses every remaining letter j -> d+1-j.
// Throws if the word is too shallow to select a leaf.
CantorPoint cantor_action(const Diagram& x, const CantorPoint& point);

// Class invariants, computed on the reduced representative.
int total_twist(const Diagram& x);
int writhe(const Diagram& x);
Permutation underlying_permutation(const Diagram& x);

}  // namespace rv
