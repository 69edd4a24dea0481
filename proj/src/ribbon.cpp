#include "rv/ribbon.hpp"

#include <stdexcept>

namespace rv {

RibbonBraid::RibbonBraid(std::vector<int> twists, BraidWord braid)
    : twists_(std::move(twists)), braid_(std::move(braid)) {
  if (static_cast<int>(twists_.size()) != braid_.strands())
    throw std::invalid_argument("twist vector length must equal band count");
}

RibbonBraid RibbonBraid::identity(int bands) {
  return RibbonBraid(std::vector<int>(bands, 0), BraidWord(bands));
}

RibbonBraid rb_multiply(const RibbonBraid& x, const RibbonBraid& y) {
  if (x.bands() != y.bands())
    throw std::invalid_argument("band count mismatch in ribbon product");
  const Permutation pi = permutation_of(x.braid());
  std::vector<int> t(x.bands());
  for (int p = 1; p <= x.bands(); ++p) t[p - 1] = x.twists()[p - 1] + y.twists()[pi(p) - 1];
  return RibbonBraid(std::move(t), multiply(x.braid(), y.braid()));
}

RibbonBraid rb_invert(const RibbonBraid& x) {
  const Permutation pi = permutation_of(x.braid());
  std::vector<int> u(x.bands());
  for (int p = 1; p <= x.bands(); ++p) u[pi(p) - 1] = -x.twists()[p - 1];
  return RibbonBraid(std::move(u), invert(x.braid()));
}

bool is_oriented(const RibbonBraid& x) {
  for (int t : x.twists())
    if (t % 2 != 0) return false;
  return true;
}

RibbonBraid split_band(const RibbonBraid& x, int p, int d) {
  const int l = x.bands();
  if (p < 1 || p > l) throw std::out_of_range("band index out of range");
  if (d < 1) throw std::invalid_argument("split width must be >= 1");
  const int t = x.twists()[p - 1];
  std::vector<int> twists;
  twists.reserve(l + d - 1);
  twists.insert(twists.end(), x.twists().begin(), x.twists().begin() + (p - 1));
  twists.insert(twists.end(), d, t);
  twists.insert(twists.end(), x.twists().begin() + p, x.twists().end());
  BraidWord braid = multiply(block_half_twist(l + d - 1, p, d, t), cable(x.braid(), p, d));
  return RibbonBraid(std::move(twists), std::move(braid));
}

std::optional<RibbonBraid> try_merge_band(const RibbonBraid& x, int p, int d, int q) {
  const int l = x.bands();
  if (d < 1 || p < 1 || p + d - 1 > l || q < 1 || q + d - 1 > l)
    throw std::out_of_range("block out of range");
  const int t = x.twists()[p - 1];
  for (int k = 1; k < d; ++k)
    if (x.twists()[p - 1 + k] != t) return std::nullopt;
  const BraidWord beta = multiply(block_half_twist(l, p, d, -t), x.braid());
  const Permutation pi = permutation_of(beta);
  for (int k = 0; k < d; ++k)
    if (pi(p + k) != q + k) return std::nullopt;
  BraidWord gamma = beta;
  for (int k = 1; k < d; ++k) gamma = delete_strand(gamma, p + 1);
  if (!equal(cable(gamma, p, d), beta)) return std::nullopt;
  std::vector<int> twists;
  twists.reserve(l - d + 1);
  twists.insert(twists.end(), x.twists().begin(), x.twists().begin() + (p - 1));
  twists.push_back(t);
  twists.insert(twists.end(), x.twists().begin() + (p - 1 + d), x.twists().end());
  return RibbonBraid(std::move(twists), std::move(gamma));
}

SignedPermutation::SignedPermutation(std::vector<int> signs, Permutation perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  if (static_cast<int>(signs_.size()) != perm_.size())
    throw std::invalid_argument("sign vector length must equal permutation size");
  for (int s : signs_)
    if (s != 0 && s != 1) throw std::invalid_argument("signs must be 0 or 1");
}

SignedPermutation SignedPermutation::identity(int l) {
  return SignedPermutation(std::vector<int>(l, 0), Permutation(l));
}

SignedPermutation sp_multiply(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("size mismatch in signed permutation product");
  std::vector<int> s(x.size());
  for (int p = 1; p <= x.size(); ++p)
    s[p - 1] = x.signs()[p - 1] ^ y.signs()[x.perm()(p) - 1];
  return SignedPermutation(std::move(s), x.perm().then(y.perm()));
}

SignedPermutation sp_invert(const SignedPermutation& x) {
  std::vector<int> s(x.size());
  for (int p = 1; p <= x.size(); ++p) s[x.perm()(p) - 1] = x.signs()[p - 1];
  return SignedPermutation(std::move(s), x.perm().inverse());
}

SignedPermutation project_to_signed(const RibbonBraid& x) {
  std::vector<int> s(x.bands());
  for (int p = 1; p <= x.bands(); ++p) s[p - 1] = ((x.twists()[p - 1] % 2) + 2) % 2;
  return SignedPermutation(std::move(s), permutation_of(x.braid()));
}

BraidWord project_to_braid(const RibbonBraid& x) { return x.braid(); }

Permutation project_to_perm(const RibbonBraid& x) { return permutation_of(x.braid()); }

int total_twist(const RibbonBraid& x) {
  int n = 0;
  for (int t : x.twists()) n += t;
  return n;
}

int writhe(const RibbonBraid& x) { return writhe(x.braid()); }

}  // namespace rv
