#pragma once

#include <string>
#include <vector>

#include "rv/perm.hpp"

namespace rv {

// A word in the Artin generators of B_l. Letter +q crosses the strand at
// position q over the strand at position q+1; -q is the inverse crossing.
// Words are kept unnormalized; equality is decided through the Garside
// normal form (or, independently, Dehornoy handle reduction).
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord&) const = default;  // syntactic only

 private:
  int strands_;
  std::vector<int> letters_;
};

// Underlying permutation as a position map, composed left to right:
// permutation_of(uv) = permutation_of(u).then(permutation_of(v)).
Permutation permutation_of(const BraidWord& w);

BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);

// Left-greedy Garside normal form Delta^inf x_1 ... x_m with permutation
// braid factors, none trivial or Delta, adjacent pairs left-weighted.
// Two words represent the same element of B_l iff their forms compare equal.
struct GarsideForm {
  int strands = 1;
  int inf = 0;
  std::vector<Permutation> factors;
  bool operator==(const GarsideForm&) const = default;
};

GarsideForm garside_form(const BraidWord& w);

// Canonical positive word for a permutation braid (repeated leftmost
// descent); the wordwise spelling of a GarsideForm.
BraidWord permutation_braid_word(int strands, const Permutation& p);
BraidWord spell(const GarsideForm& f);

bool equal(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);

// Independent word-problem oracle: Dehornoy handle reduction. A handle-free
// word is sigma-definite in its lowest index, hence nontrivial unless empty.
bool handle_reduce_is_trivial(const BraidWord& w);

// Geometric deletion of the strand starting at source position s.
BraidWord delete_strand(const BraidWord& w, int s);

// Replaces the strand starting at source position i by d parallel strands.
BraidWord cable(const BraidWord& w, int i, int d);

// Delta_{i,d}^t: t-th power of the positive half twist of the block of d
// strands starting at position i, as a word in B_l.
BraidWord block_half_twist(int strands, int i, int d, int t);

// Signed crossing counts between pairs of strands, indexed by source
// position (1-based; entry [a-1][b-1]).
std::vector<std::vector<int>> linking_matrix(const BraidWord& w);

// Sum of letter signs; a homomorphism B_l -> Z.
int writhe(const BraidWord& w);

}  // namespace rv
