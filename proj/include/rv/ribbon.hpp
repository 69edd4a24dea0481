#pragma once

#include <optional>
#include <vector>

#include "rv/braid.hpp"
#include "rv/perm.hpp"

namespace rv {

// An element of the ribbon braid group RB_l = Z^l x| B_l: a braid on l bands
// together with one twist count per band, in half-twist units and indexed by
// source position. A band is orientation-reversing iff its entry is odd.
// In products the right factor's twists are transported along the left
// factor's bands: (t, b)(t', b') = (t'', bb') with t''_p = t_p + t'_{pi_b(p)}.
class RibbonBraid {
 public:
  RibbonBraid(std::vector<int> twists, BraidWord braid);
  static RibbonBraid identity(int bands);

  int bands() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  const BraidWord& braid() const { return braid_; }

  bool operator==(const RibbonBraid&) const = default;  // syntactic only

 private:
  std::vector<int> twists_;
  BraidWord braid_;
};

RibbonBraid rb_multiply(const RibbonBraid& x, const RibbonBraid& y);
RibbonBraid rb_invert(const RibbonBraid& x);

// True iff every twist entry is even; the oriented elements form a subgroup.
bool is_oriented(const RibbonBraid& x);

// Splits band p into d parallel sub-bands, each inheriting the twist t of
// the parent band, braided together by the block half twist Delta^t placed
// at the source end: new braid = Delta_{p,d}^t . cable(braid, p, d).
RibbonBraid split_band(const RibbonBraid& x, int p, int d);

// Inverse of split_band: succeeds iff x is a split at block p..p+d-1 landing
// on target block q..q+d-1. Certificate: equal twists t on the block; after
// removing Delta_{p,d}^t the block must map order-preservingly onto the
// target block, and deleting all but one block strand then re-cabling must
// reproduce the braid. Non-mergeability is an empty result, not an error.
std::optional<RibbonBraid> try_merge_band(const RibbonBraid& x, int p, int d, int q);

// Decoration group of the symmetric Higman-Thompson groups: a permutation
// with one Z/2 flip per source position. Same composition convention as
// RibbonBraid: s''_p = s_p xor s'_{pi(p)}.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> signs, Permutation perm);
  static SignedPermutation identity(int l);

  int size() const { return perm_.size(); }
  const std::vector<int>& signs() const { return signs_; }
  const Permutation& perm() const { return perm_; }

  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> signs_;  // values in {0,1}
  Permutation perm_;
};

SignedPermutation sp_multiply(const SignedPermutation& x, const SignedPermutation& y);
SignedPermutation sp_invert(const SignedPermutation& x);

// Quotient maps; all three are group homomorphisms.
SignedPermutation project_to_signed(const RibbonBraid& x);
BraidWord project_to_braid(const RibbonBraid& x);
Permutation project_to_perm(const RibbonBraid& x);

// Homomorphisms to Z used as cheap separants.
int total_twist(const RibbonBraid& x);
int writhe(const RibbonBraid& x);

}  // namespace rv
