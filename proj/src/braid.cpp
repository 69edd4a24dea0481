#include "rv/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace rv {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 0) throw std::invalid_argument("strand count must be >= 0");
  for (int g : letters_) {
    int q = std::abs(g);
    if (q < 1 || q > strands_ - 1)
      throw std::invalid_argument("braid letter index out of range");
  }
}

Permutation permutation_of(const BraidWord& w) {
  const int l = w.strands();
  std::vector<int> at(l);  // at[pos-1] = strand currently at pos, by source
  for (int i = 0; i < l; ++i) at[i] = i + 1;
  for (int g : w.letters()) {
    int q = std::abs(g);
    std::swap(at[q - 1], at[q]);
  }
  std::vector<int> img(l);
  for (int pos = 1; pos <= l; ++pos) img[at[pos - 1] - 1] = pos;
  return Permutation(std::move(img));
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand count mismatch in braid product");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(w.strands(), std::move(letters));
}

namespace {

// Starting set of a permutation braid: sigma_i can be the first letter iff
// the strands at source positions i, i+1 cross, i.e. p(i) > p(i+1).
bool in_starting_set(const Permutation& p, int i) { return p(i) > p(i + 1); }

// Finishing set: sigma_i can be the last letter iff the strands ending at
// target positions i, i+1 cross, i.e. p^{-1}(i) > p^{-1}(i+1).
bool in_finishing_set(const Permutation& pinv, int i) { return pinv(i) > pinv(i + 1); }

// tau(x) = Delta^{-1} x Delta, the flip automorphism on permutation braids.
Permutation tau(const Permutation& p, const Permutation& delta) {
  return delta.then(p).then(delta);
}

// Makes the pair (a, b) left-weighted by sliding crossings from the front of
// b to the back of a. Returns true if anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool moved = false;
  const int l = a.size();
  for (;;) {
    Permutation ainv = a.inverse();
    int slide = 0;
    for (int i = 1; i < l; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(ainv, i)) {
        slide = i;
        break;
      }
    }
    if (slide == 0) return moved;
    // a <- a * sigma_i : swap the two positions mapping to slide, slide+1
    std::vector<int> ai = a.images();
    std::swap(ai[ainv(slide) - 1], ai[ainv(slide + 1) - 1]);
    a = Permutation(std::move(ai));
    // b <- sigma_i^{-1} * b : swap entries slide, slide+1
    std::vector<int> bi = b.images();
    std::swap(bi[slide - 1], bi[slide]);
    b = Permutation(std::move(bi));
    moved = true;
  }
}

void absorb_delta_at(std::vector<Permutation>& fs, std::size_t j, int& inf,
                     const Permutation& delta) {
  for (std::size_t t = 0; t < j; ++t) fs[t] = tau(fs[t], delta);
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j));
  ++inf;
}

void left_normalize(int l, int& inf, std::vector<Permutation>& fs) {
  const Permutation delta = Permutation::reversal(l);
  std::erase_if(fs, [](const Permutation& p) { return p.is_identity(); });
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (l > 1 && fs[j] == delta) {
        absorb_delta_at(fs, j, inf, delta);
        dirty = true;
        break;
      }
      if (j + 1 >= fs.size()) continue;
      bool moved = left_weight_pair(fs[j], fs[j + 1]);
      if (fs[j + 1].is_identity()) {
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        dirty = true;
        break;
      }
      if (l > 1 && fs[j] == delta) {
        absorb_delta_at(fs, j, inf, delta);
        dirty = true;
        break;
      }
      if (moved) dirty = true;
    }
  }
}

}  // namespace

GarsideForm garside_form(const BraidWord& w) {
  const int l = w.strands();
  GarsideForm form;
  form.strands = l;
  form.inf = 0;
  const Permutation delta = Permutation::reversal(l);
  for (int g : w.letters()) {
    const int q = std::abs(g);
    const Permutation s = Permutation::transposition(l, q);
    if (g > 0) {
      form.factors.push_back(s);
    } else {
      // sigma_q^{-1} = Delta^{-1} (Delta sigma_q^{-1}); commute Delta^{-1}
      // to the front past the existing factors.
      form.inf -= 1;
      for (Permutation& f : form.factors) f = tau(f, delta);
      form.factors.push_back(delta.then(s));
    }
  }
  left_normalize(l, form.inf, form.factors);
  return form;
}

BraidWord permutation_braid_word(int strands, const Permutation& p) {
  if (p.size() != strands) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img = p.images();
  std::vector<int> letters;
  for (;;) {
    int i = 0;
    for (int k = 1; k < strands; ++k) {
      if (img[k - 1] > img[k]) {
        i = k;
        break;
      }
    }
    if (i == 0) break;
    letters.push_back(i);
    std::swap(img[i - 1], img[i]);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord spell(const GarsideForm& f) {
  const int l = f.strands;
  BraidWord delta_word = permutation_braid_word(l, Permutation::reversal(l));
  BraidWord out(l);
  if (f.inf >= 0) {
    for (int k = 0; k < f.inf; ++k) out = multiply(out, delta_word);
  } else {
    BraidWord delta_inv = invert(delta_word);
    for (int k = 0; k < -f.inf; ++k) out = multiply(out, delta_inv);
  }
  for (const Permutation& p : f.factors) out = multiply(out, permutation_braid_word(l, p));
  return out;
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand count mismatch in braid comparison");
  if (!(permutation_of(u) == permutation_of(v))) return false;
  if (writhe(u) != writhe(v)) return false;
  return garside_form(u) == garside_form(v);
}

bool is_trivial(const BraidWord& w) {
  GarsideForm f = garside_form(w);
  return f.inf == 0 && f.factors.empty();
}

bool handle_reduce_is_trivial(const BraidWord& w) {
  std::vector<int> v = w.letters();
  // Generous safety cap; reduction is convergent, so hitting it means a bug.
  const long max_steps = 4'000'000;
  for (long step = 0; step <= max_steps; ++step) {
    const int n = static_cast<int>(v.size());
    int hs = -1, ht = -1;
    for (int t = 0; t < n && hs < 0; ++t) {
      const int i = std::abs(v[t]);
      for (int s = t - 1; s >= 0; --s) {
        const int j = std::abs(v[s]);
        if (j == i) {
          if (v[s] == -v[t]) {
            hs = s;
            ht = t;
          }
          break;
        }
        if (j == i - 1) break;  // interior may not contain sigma_{i-1}
      }
    }
    if (hs < 0) return v.empty();
    const int e = v[hs] > 0 ? 1 : -1;
    const int i = std::abs(v[hs]);
    std::vector<int> out;
    out.reserve(v.size() + 8);
    out.insert(out.end(), v.begin(), v.begin() + hs);
    for (int k = hs + 1; k < ht; ++k) {
      const int g = v[k];
      if (std::abs(g) == i + 1) {
        // sigma_i^e sigma_{i+1}^d sigma_i^{-e} = sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e
        const int dsign = g > 0 ? 1 : -1;
        out.push_back(-e * (i + 1));
        out.push_back(dsign * i);
        out.push_back(e * (i + 1));
      } else {
        out.push_back(g);
      }
    }
    out.insert(out.end(), v.begin() + ht + 1, v.end());
    v = std::move(out);
  }
  throw std::logic_error("handle reduction exceeded the step cap");
}

BraidWord delete_strand(const BraidWord& w, int s) {
  const int l = w.strands();
  if (s < 1 || s > l) throw std::out_of_range("strand index out of range");
  int p = s;
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int g : w.letters()) {
    const int q = std::abs(g);
    if (q == p - 1) {
      p -= 1;
    } else if (q == p) {
      p += 1;
    } else if (q < p - 1) {
      out.push_back(g);
    } else {
      out.push_back(g > 0 ? q - 1 : -(q - 1));
    }
  }
  return BraidWord(l - 1, std::move(out));
}

BraidWord cable(const BraidWord& w, int i, int d) {
  const int l = w.strands();
  if (i < 1 || i > l) throw std::out_of_range("strand index out of range");
  if (d < 1) throw std::invalid_argument("cable width must be >= 1");
  int c = i;  // current leftmost position of the block
  std::vector<int> out;
  out.reserve(w.letters().size() * d);
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
    } else {  // q == c
      for (int k = c + d - 1; k >= c; --k) out.push_back(sg * k);
      c += 1;
    }
  }
  return BraidWord(l + d - 1, std::move(out));
}

BraidWord block_half_twist(int strands, int i, int d, int t) {
  if (d < 1 || i < 1 || i + d - 1 > strands)
    throw std::out_of_range("block out of range");
  std::vector<int> delta;
  for (int a = 1; a <= d - 1; ++a)
    for (int b = i + a - 1; b >= i; --b) delta.push_back(b);
  std::vector<int> out;
  if (t >= 0) {
    for (int k = 0; k < t; ++k) out.insert(out.end(), delta.begin(), delta.end());
  } else {
    std::reverse(delta.begin(), delta.end());
    for (int& g : delta) g = -g;
    for (int k = 0; k < -t; ++k) out.insert(out.end(), delta.begin(), delta.end());
  }
  return BraidWord(strands, std::move(out));
}

std::vector<std::vector<int>> linking_matrix(const BraidWord& w) {
  const int l = w.strands();
  std::vector<std::vector<int>> m(l, std::vector<int>(l, 0));
  std::vector<int> at(l);
  for (int i = 0; i < l; ++i) at[i] = i + 1;
  for (int g : w.letters()) {
    const int q = std::abs(g);
    const int sg = g > 0 ? 1 : -1;
    const int a = at[q - 1], b = at[q];
    m[a - 1][b - 1] += sg;
    m[b - 1][a - 1] += sg;
    std::swap(at[q - 1], at[q]);
  }
  return m;
}

int writhe(const BraidWord& w) {
  int n = 0;
  for (int g : w.letters()) n += g > 0 ? 1 : -1;
  return n;
}

}  // namespace rv
