#include "rv/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rv {

Permutation::Permutation(int l) : img_(l) {
  if (l < 0) throw std::invalid_argument("permutation size must be >= 0");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int l = size();
  std::vector<bool> seen(l, false);
  for (int v : img_) {
    if (v < 1 || v > l || seen[v - 1])
      throw std::invalid_argument("image list is not a bijection on 1..l");
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int l, int q) {
  if (q < 1 || q + 1 > l) throw std::out_of_range("transposition index out of range");
  Permutation p(l);
  std::swap(p.img_[q - 1], p.img_[q]);
  return p;
}

Permutation Permutation::reversal(int l) {
  Permutation p(l);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Permutation Permutation::then(const Permutation& g) const {
  if (size() != g.size()) throw std::invalid_argument("size mismatch in composition");
  Permutation r(size());
  for (int i = 0; i < size(); ++i) r.img_[i] = g.img_[img_[i] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(size());
  for (int i = 0; i < size(); ++i) r.img_[img_[i] - 1] = i + 1;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

int Permutation::inversions() const {
  int n = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++n;
  return n;
}

}  // namespace rv
