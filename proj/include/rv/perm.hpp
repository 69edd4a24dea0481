#pragma once

#include <vector>

namespace rv {

// A permutation of {1..l}, stored as the image list: images()[i-1] is where
// position i goes. Throughout the library permutations are position maps
// (source position -> target position) and multiplication is left to right:
// a.then(b) first applies a, then b.
class Permutation {
 public:
  explicit Permutation(int l);                 // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int l, int q);  // swaps q, q+1
  static Permutation reversal(int l);              // i -> l+1-i

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Number of inverted pairs i<j with img(i)>img(j); the crossing count of
  // the positive permutation braid realizing this permutation.
  int inversions() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace rv
