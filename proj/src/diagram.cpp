#include "rv/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "rv/rng.hpp"

namespace rv {

namespace {

Variant variant_of(const Decoration& dec) {
  switch (dec.index()) {
    case 0: return Variant::Perm;
    case 1: return Variant::SignedPerm;
    case 2: return Variant::Braid;
    default: return Variant::Ribbon;
  }
}

bool decoration_matches(Variant v, const Decoration& dec) {
  if (v == Variant::RibbonOriented) return dec.index() == 3;
  return variant_of(dec) == v;
}

// Permutation of the expanded diagram: block p..p+d-1 onto q..q+d-1
// (ascending, or descending for a flipped block), everything else shifted.
Permutation split_perm(const Permutation& pi, int p, int q, int d, bool descending) {
  const int l = pi.size();
  std::vector<int> img(l + d - 1);
  for (int x = 1; x <= l; ++x) {
    if (x == p) continue;
    const int sx = x < p ? x : x + d - 1;
    const int y = pi(x);
    const int ty = y < q ? y : y + d - 1;
    img[sx - 1] = ty;
  }
  for (int k = 0; k < d; ++k)
    img[p - 1 + k] = descending ? q + d - 1 - k : q + k;
  return Permutation(std::move(img));
}

std::optional<Permutation> merge_perm(const Permutation& pi, int p, int q, int d,
                                      bool descending) {
  const int l = pi.size();
  for (int k = 0; k < d; ++k)
    if (pi(p + k) != (descending ? q + d - 1 - k : q + k)) return std::nullopt;
  std::vector<int> img(l - d + 1);
  for (int x = 1; x <= l; ++x) {
    if (x >= p && x <= p + d - 1) continue;
    const int sx = x < p ? x : x - d + 1;
    const int y = pi(x);
    const int ty = y < q ? y : y - d + 1;
    img[sx - 1] = ty;
  }
  img[p - 1] = q;
  return Permutation(std::move(img));
}

std::vector<int> expand_block(const std::vector<int>& v, int p, int d, int value) {
  std::vector<int> out;
  out.reserve(v.size() + d - 1);
  out.insert(out.end(), v.begin(), v.begin() + (p - 1));
  out.insert(out.end(), d, value);
  out.insert(out.end(), v.begin() + p, v.end());
  return out;
}

std::vector<int> collapse_block(const std::vector<int>& v, int p, int d, int value) {
  std::vector<int> out;
  out.reserve(v.size() - d + 1);
  out.insert(out.end(), v.begin(), v.begin() + (p - 1));
  out.push_back(value);
  out.insert(out.end(), v.begin() + (p - 1 + d), v.end());
  return out;
}

}  // namespace

int dec_size(const Decoration& dec) {
  return std::visit([](const auto& d) -> int {
    using T = std::decay_t<decltype(d)>;
    if constexpr (std::is_same_v<T, Permutation>) return d.size();
    else if constexpr (std::is_same_v<T, SignedPermutation>) return d.size();
    else if constexpr (std::is_same_v<T, BraidWord>) return d.strands();
    else return d.bands();
  }, dec);
}

Decoration dec_identity(Variant v, int l) {
  switch (v) {
    case Variant::Perm: return Permutation(l);
    case Variant::SignedPerm: return SignedPermutation::identity(l);
    case Variant::Braid: return BraidWord(l);
    default: return RibbonBraid::identity(l);
  }
}

Decoration dec_compose(const Decoration& x, const Decoration& y) {
  if (x.index() != y.index()) throw std::invalid_argument("decoration kind mismatch");
  switch (x.index()) {
    case 0: return std::get<0>(x).then(std::get<0>(y));
    case 1: return sp_multiply(std::get<1>(x), std::get<1>(y));
    case 2: return multiply(std::get<2>(x), std::get<2>(y));
    default: return rb_multiply(std::get<3>(x), std::get<3>(y));
  }
}

Decoration dec_invert(const Decoration& x) {
  switch (x.index()) {
    case 0: return std::get<0>(x).inverse();
    case 1: return sp_invert(std::get<1>(x));
    case 2: return invert(std::get<2>(x));
    default: return rb_invert(std::get<3>(x));
  }
}

int dec_target_of(const Decoration& dec, int p) { return dec_permutation(dec)(p); }

Permutation dec_permutation(const Decoration& dec) {
  switch (dec.index()) {
    case 0: return std::get<0>(dec);
    case 1: return std::get<1>(dec).perm();
    case 2: return permutation_of(std::get<2>(dec));
    default: return permutation_of(std::get<3>(dec).braid());
  }
}

Decoration dec_split_at(const Decoration& dec, int p, int q, int d) {
  switch (dec.index()) {
    case 0:
      return split_perm(std::get<0>(dec), p, q, d, false);
    case 1: {
      const SignedPermutation& sp = std::get<1>(dec);
      const int s = sp.signs()[p - 1];
      return SignedPermutation(expand_block(sp.signs(), p, d, s),
                               split_perm(sp.perm(), p, q, d, s == 1));
    }
    case 2:
      return cable(std::get<2>(dec), p, d);
    default:
      return split_band(std::get<3>(dec), p, d);
  }
}

std::optional<Decoration> dec_try_merge_at(const Decoration& dec, int p, int q, int d) {
  switch (dec.index()) {
    case 0: {
      auto m = merge_perm(std::get<0>(dec), p, q, d, false);
      if (!m) return std::nullopt;
      return Decoration(std::move(*m));
    }
    case 1: {
      const SignedPermutation& sp = std::get<1>(dec);
      const int s = sp.signs()[p - 1];
      for (int k = 1; k < d; ++k)
        if (sp.signs()[p - 1 + k] != s) return std::nullopt;
      auto m = merge_perm(sp.perm(), p, q, d, s == 1);
      if (!m) return std::nullopt;
      return Decoration(SignedPermutation(collapse_block(sp.signs(), p, d, s), std::move(*m)));
    }
    case 2: {
      const BraidWord& w = std::get<2>(dec);
      const Permutation pi = permutation_of(w);
      for (int k = 0; k < d; ++k)
        if (pi(p + k) != q + k) return std::nullopt;
      BraidWord gamma = w;
      for (int k = 1; k < d; ++k) gamma = delete_strand(gamma, p + 1);
      if (!equal(cable(gamma, p, d), w)) return std::nullopt;
      return Decoration(std::move(gamma));
    }
    default: {
      auto m = try_merge_band(std::get<3>(dec), p, d, q);
      if (!m) return std::nullopt;
      return Decoration(std::move(*m));
    }
  }
}

bool dec_canonical_equal(const Decoration& a, const Decoration& b) {
  if (a.index() != b.index()) return false;
  switch (a.index()) {
    case 0: return std::get<0>(a) == std::get<0>(b);
    case 1: return std::get<1>(a) == std::get<1>(b);
    case 2: return equal(std::get<2>(a), std::get<2>(b));
    default: {
      const RibbonBraid& x = std::get<3>(a);
      const RibbonBraid& y = std::get<3>(b);
      return x.twists() == y.twists() && equal(x.braid(), y.braid());
    }
  }
}

Diagram::Diagram(GroupContext ctx, Forest source, Decoration dec, Forest target)
    : ctx_(ctx), source_(std::move(source)), dec_(std::move(dec)), target_(std::move(target)) {
  if (ctx_.d < 2 || ctx_.r < 1) throw std::invalid_argument("invalid group context");
  if (source_.arity() != ctx_.d || target_.arity() != ctx_.d)
    throw std::invalid_argument("forest arity does not match context");
  if (source_.root_count() != ctx_.r || target_.root_count() != ctx_.r)
    throw std::invalid_argument("forest root count does not match context");
  if (!decoration_matches(ctx_.variant, dec_))
    throw std::invalid_argument("decoration kind does not match variant");
  const int l = dec_size(dec_);
  if (source_.leaf_count() != l || target_.leaf_count() != l)
    throw std::invalid_argument("decoration size must equal the leaf counts");
  if (ctx_.variant == Variant::RibbonOriented && !is_oriented(std::get<3>(dec_)))
    throw std::invalid_argument("oriented ribbon diagrams require even twists");
}

bool Diagram::operator==(const Diagram& o) const {
  return ctx_ == o.ctx_ && source_ == o.source_ && target_ == o.target_ && dec_ == o.dec_;
}

Diagram identity(const GroupContext& ctx) {
  return Diagram(ctx, Forest::trivial(ctx.d, ctx.r), dec_identity(ctx.variant, ctx.r),
                 Forest::trivial(ctx.d, ctx.r));
}

Diagram expand(const Diagram& x, int i) {
  const int l = x.leaves();
  if (i < 1 || i > l) throw std::out_of_range("leaf index out of range");
  const int q = dec_target_of(x.decoration(), i);
  return Diagram(x.context(), x.source().split_leaf(i),
                 dec_split_at(x.decoration(), i, q, x.context().d),
                 x.target().split_leaf(q));
}

Diagram expand_target(const Diagram& x, int j) {
  const int l = x.leaves();
  if (j < 1 || j > l) throw std::out_of_range("leaf index out of range");
  return expand(x, dec_permutation(x.decoration()).inverse()(j));
}

Diagram reduce(const Diagram& x) {
  if (x.reduced_hint_) return x;
  const int d = x.context().d;
  Forest fm = x.source();
  Forest fp = x.target();
  Decoration dec = x.decoration();
  bool changed = true;
  while (changed) {
    changed = false;
    const auto src = fm.elementary_carets();
    const auto tgt = fp.elementary_carets();
    for (const CaretRef& sc : src) {
      for (const CaretRef& tc : tgt) {
        auto m = dec_try_merge_at(dec, sc.first_leaf, tc.first_leaf, d);
        if (m) {
          fm = fm.remove_elementary_caret(sc.first_leaf);
          fp = fp.remove_elementary_caret(tc.first_leaf);
          dec = std::move(*m);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  Diagram out(x.context(), std::move(fm), std::move(dec), std::move(fp));
  out.reduced_hint_ = true;
  return out;
}

bool is_reduced(const Diagram& x) {
  const int d = x.context().d;
  for (const CaretRef& sc : x.source().elementary_carets())
    for (const CaretRef& tc : x.target().elementary_carets())
      if (dec_try_merge_at(x.decoration(), sc.first_leaf, tc.first_leaf, d)) return false;
  return true;
}

Diagram multiply(const Diagram& x0, const Diagram& y0) {
  if (!(x0.context() == y0.context())) throw std::invalid_argument("context mismatch");
  JoinResult j = join(x0.target(), y0.source());
  Diagram x = x0;
  for (int leaf : j.exp_left) x = expand_target(x, leaf);
  Diagram y = y0;
  for (int leaf : j.exp_right) y = expand(y, leaf);
  Decoration dec = dec_compose(x.decoration(), y.decoration());
  return reduce(Diagram(x0.context(), x.source(), std::move(dec), y.target()));
}

Diagram invert(const Diagram& x) {
  return reduce(Diagram(x.context(), x.target(), dec_invert(x.decoration()), x.source()));
}

bool equals(const Diagram& x, const Diagram& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("context mismatch");
  const Diagram a = reduce(x);
  const Diagram b = reduce(y);
  return a.source() == b.source() && a.target() == b.target() &&
         dec_canonical_equal(a.decoration(), b.decoration());
}

namespace {

// Only maps that are constant on equivalence classes may appear here. Band
// splitting inserts the block half twist Delta^t into the braid part and a
// set flip makes the block order-reversing, so forgetting twists (RV -> bV,
// RV+ -> bV) or forgetting flips (V(Z/2) -> V, RV -> V) depends on the
// representative and defines no map of groups. What survives:
// RV -> V(Z/2), RV+ -> V, bV -> V.
bool arrow_exists(Variant from, Variant to) {
  switch (from) {
    case Variant::Ribbon:
      return to == Variant::SignedPerm;
    case Variant::RibbonOriented:
    case Variant::Braid:
      return to == Variant::Perm;
    default:
      return false;
  }
}

Decoration project_dec(const Decoration& dec, Variant to) {
  if (dec.index() == 3) {
    const RibbonBraid& rb = std::get<3>(dec);
    if (to == Variant::SignedPerm) return project_to_signed(rb);
    return project_to_perm(rb);
  }
  return permutation_of(std::get<2>(dec));
}

}  // namespace

Diagram project(const Diagram& x, Variant target) {
  if (!arrow_exists(x.context().variant, target))
    throw std::invalid_argument("no quotient map onto the requested variant");
  GroupContext ctx{x.context().d, x.context().r, target};
  return reduce(Diagram(ctx, x.source(), project_dec(x.decoration(), target), x.target()));
}

Diagram lift(const Diagram& v, Variant target) {
  if (v.context().variant != Variant::Perm)
    throw std::invalid_argument("lift expects a permutation diagram");
  const Diagram red = reduce(v);
  const Permutation& pi = std::get<0>(red.decoration());
  const int l = pi.size();
  Decoration dec = [&]() -> Decoration {
    switch (target) {
      case Variant::Perm: return pi;
      case Variant::SignedPerm: return SignedPermutation(std::vector<int>(l, 0), pi);
      case Variant::Braid: return permutation_braid_word(l, pi);
      default:
        return RibbonBraid(std::vector<int>(l, 0), permutation_braid_word(l, pi));
    }
  }();
  GroupContext ctx{red.context().d, red.context().r, target};
  return reduce(Diagram(ctx, red.source(), std::move(dec), red.target()));
}

namespace {

Forest append_trivial_root(const Forest& f) {
  std::vector<Tree> roots = f.roots();
  roots.emplace_back();
  return Forest(f.arity(), std::move(roots));
}

Decoration dec_add_fixed_strand(const Decoration& dec) {
  const int l = dec_size(dec);
  switch (dec.index()) {
    case 0: {
      std::vector<int> img = std::get<0>(dec).images();
      img.push_back(l + 1);
      return Permutation(std::move(img));
    }
    case 1: {
      const SignedPermutation& sp = std::get<1>(dec);
      std::vector<int> s = sp.signs();
      s.push_back(0);
      std::vector<int> img = sp.perm().images();
      img.push_back(l + 1);
      return SignedPermutation(std::move(s), Permutation(std::move(img)));
    }
    case 2:
      return BraidWord(l + 1, std::get<2>(dec).letters());
    default: {
      const RibbonBraid& rb = std::get<3>(dec);
      std::vector<int> t = rb.twists();
      t.push_back(0);
      return RibbonBraid(std::move(t), BraidWord(l + 1, rb.braid().letters()));
    }
  }
}

}  // namespace

Diagram stabilize(const Diagram& x) {
  GroupContext ctx{x.context().d, x.context().r + 1, x.context().variant};
  return reduce(Diagram(ctx, append_trivial_root(x.source()),
                        dec_add_fixed_strand(x.decoration()), append_trivial_root(x.target())));
}

Diagram shift_iso(const Diagram& x) {
  const int d = x.context().d;
  Diagram y = x;
  if (y.source().roots()[0].leaf()) y = expand(y, 1);
  if (y.target().roots()[0].leaf()) y = expand_target(y, 1);
  auto unwrap = [d](const Forest& f) {
    std::vector<Tree> roots(f.roots()[0].children());
    roots.insert(roots.end(), f.roots().begin() + 1, f.roots().end());
    return Forest(d, std::move(roots));
  };
  GroupContext ctx{d, x.context().r + d - 1, x.context().variant};
  return reduce(Diagram(ctx, unwrap(y.source()), y.decoration(), unwrap(y.target())));
}

Diagram shift_iso_inverse(const Diagram& x) {
  const int d = x.context().d;
  if (x.context().r < d) throw std::invalid_argument("too few roots to unshift");
  auto wrap = [d](const Forest& f) {
    std::vector<Tree> kids(f.roots().begin(), f.roots().begin() + d);
    std::vector<Tree> roots;
    roots.emplace_back(std::move(kids));
    roots.insert(roots.end(), f.roots().begin() + d, f.roots().end());
    return Forest(d, std::move(roots));
  };
  GroupContext ctx{d, x.context().r - d + 1, x.context().variant};
  return reduce(Diagram(ctx, wrap(x.source()), x.decoration(), wrap(x.target())));
}

// Draw order (fixed; part of the reproducibility contract):
//   1. carets splits for F_-: each draws leaf = 1 + next() % leaf_count
//   2. the same for F_+
//   3. decoration:
//        Perm:        Fisher-Yates, for i = l..2: j = 1 + next() % i, swap i<->j
//        SignedPerm:  permutation as above, then l flip draws next() % 2
//                     (skipped, all zero, when twist_bound == 0)
//        Braid:       braid_len letters, each: index 1 + next() % (l-1),
//                     then sign next() % 2 (positive on 0); no draws if l < 2
//        Ribbon:      l twist draws next() % (2*bound+1) - bound (doubled for
//                     the oriented variant), then the braid letters as above
Diagram random_element(const GroupContext& ctx, int carets, int braid_len, int twist_bound,
                       std::uint64_t seed) {
  if (carets < 0 || braid_len < 0 || twist_bound < 0)
    throw std::invalid_argument("sizes must be nonnegative");
  SplitMix64 rng(seed);
  auto grow = [&](Forest f) {
    for (int k = 0; k < carets; ++k)
      f = f.split_leaf(1 + static_cast<int>(rng.below(f.leaf_count())));
    return f;
  };
  Forest fm = grow(Forest::trivial(ctx.d, ctx.r));
  Forest fp = grow(Forest::trivial(ctx.d, ctx.r));
  const int l = fm.leaf_count();

  auto draw_perm = [&]() {
    std::vector<int> img(l);
    for (int i = 0; i < l; ++i) img[i] = i + 1;
    for (int i = l; i >= 2; --i) {
      const int j = 1 + static_cast<int>(rng.below(i));
      std::swap(img[i - 1], img[j - 1]);
    }
    return Permutation(std::move(img));
  };
  auto draw_braid = [&]() {
    std::vector<int> letters;
    if (l >= 2) {
      letters.reserve(braid_len);
      for (int k = 0; k < braid_len; ++k) {
        const int q = 1 + static_cast<int>(rng.below(l - 1));
        letters.push_back(rng.below(2) == 0 ? q : -q);
      }
    }
    return BraidWord(l, std::move(letters));
  };
  auto draw_twists = [&](int scale) {
    std::vector<int> t(l, 0);
    for (int i = 0; i < l; ++i)
      t[i] = (static_cast<int>(rng.below(2 * twist_bound + 1)) - twist_bound) * scale;
    return t;
  };

  Decoration dec = [&]() -> Decoration {
    switch (ctx.variant) {
      case Variant::Perm:
        return draw_perm();
      case Variant::SignedPerm: {
        Permutation p = draw_perm();
        std::vector<int> s(l, 0);
        if (twist_bound > 0)
          for (int i = 0; i < l; ++i) s[i] = static_cast<int>(rng.below(2));
        return SignedPermutation(std::move(s), std::move(p));
      }
      case Variant::Braid:
        return draw_braid();
      case Variant::Ribbon: {
        std::vector<int> t = draw_twists(1);
        return RibbonBraid(std::move(t), draw_braid());
      }
      default: {
        std::vector<int> t = draw_twists(2);
        return RibbonBraid(std::move(t), draw_braid());
      }
    }
  }();
  return reduce(Diagram(ctx, std::move(fm), std::move(dec), std::move(fp)));
}

CantorPoint cantor_action(const Diagram& x, const CantorPoint& point) {
  const Variant v = x.context().variant;
  if (v != Variant::Perm && v != Variant::SignedPerm)
    throw std::invalid_argument("the prefix action is defined for V and V(Z/2) diagrams");
  const int d = x.context().d;
  if (point.root < 1 || point.root > x.context().r)
    throw std::out_of_range("root index out of range");
  const Tree* node = &x.source().roots()[point.root - 1];
  std::size_t used = 0;
  while (!node->leaf()) {
    if (used >= point.word.size())
      throw std::invalid_argument("point word too shallow to select a leaf");
    const int c = point.word[used];
    if (c < 1 || c > d) throw std::invalid_argument("point letter out of range");
    node = &node->children()[c - 1];
    ++used;
  }
  LeafAddress src_addr{point.root,
                       std::vector<int>(point.word.begin(), point.word.begin() + used)};
  const int i = x.source().leaf_at(src_addr);
  const int j = dec_target_of(x.decoration(), i);
  LeafAddress dst = x.target().leaf_address(j);
  CantorPoint out{dst.root, std::move(dst.path)};
  const bool flip =
      v == Variant::SignedPerm && std::get<1>(x.decoration()).signs()[i - 1] == 1;
  for (std::size_t k = used; k < point.word.size(); ++k) {
    const int c = point.word[k];
    if (c < 1 || c > d) throw std::invalid_argument("point letter out of range");
    out.word.push_back(flip ? d + 1 - c : c);
  }
  return out;
}

int total_twist(const Diagram& x) {
  const Diagram red = reduce(x);
  if (red.decoration().index() == 3) return total_twist(std::get<3>(red.decoration()));
  return 0;
}

int writhe(const Diagram& x) {
  const Diagram red = reduce(x);
  if (red.decoration().index() == 2) return writhe(std::get<2>(red.decoration()));
  if (red.decoration().index() == 3) return writhe(std::get<3>(red.decoration()));
  return 0;
}

Permutation underlying_permutation(const Diagram& x) {
  return dec_permutation(reduce(x).decoration());
}

}  // namespace rv
