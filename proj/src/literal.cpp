#include "rv/literal.hpp"

#include <cctype>
#include <charconv>

namespace rv {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
    return s[pos];
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!try_consume(c)) throw ParseError(std::string("expected ") + what, pos);
  }
  bool try_consume_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    int value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, value);
    if (res.ec != std::errc() || res.ptr != s.data() + pos || pos == start)
      throw ParseError("expected an integer", start);
    return value;
  }
  std::vector<int> parse_int_list_allow_empty(char stop1, char stop2) {
    std::vector<int> out;
    skip_ws();
    if (pos >= s.size() || s[pos] == stop1 || s[pos] == stop2) return out;
    out.push_back(parse_int());
    while (try_consume(',')) out.push_back(parse_int());
    return out;
  }
};

// Forest sub-parser sharing the cursor (stops before '|' or ')').
Tree parse_tree_at(Cursor& c, int d) {
  char ch = c.peek();
  if (ch == '.') {
    ++c.pos;
    return Tree();
  }
  if (ch != '(') throw ParseError("expected '.' or '('", c.pos);
  ++c.pos;
  std::vector<Tree> kids;
  kids.reserve(d);
  kids.push_back(parse_tree_at(c, d));
  for (int k = 1; k < d; ++k) {
    c.expect(',', "',' (node arity must equal d)");
    kids.push_back(parse_tree_at(c, d));
  }
  c.expect(')', "')' (node arity must equal d)");
  return Tree(std::move(kids));
}

Forest parse_forest_at(Cursor& c, int d, int r) {
  std::vector<Tree> roots;
  roots.reserve(r);
  roots.push_back(parse_tree_at(c, d));
  for (int k = 1; k < r; ++k) {
    c.expect('+', "'+' (forest must have exactly r trees)");
    roots.push_back(parse_tree_at(c, d));
  }
  return Forest(d, std::move(roots));
}

std::optional<GroupContext> try_parse_context_at(Cursor& c) {
  Cursor probe = c;
  Variant v;
  if (probe.try_consume_word("RV+")) v = Variant::RibbonOriented;
  else if (probe.try_consume_word("RV")) v = Variant::Ribbon;
  else if (probe.try_consume_word("bV")) v = Variant::Braid;
  else if (probe.try_consume_word("V2")) v = Variant::SignedPerm;
  else if (probe.try_consume_word("V")) v = Variant::Perm;
  else return std::nullopt;
  if (!probe.try_consume('{')) return std::nullopt;
  GroupContext ctx;
  ctx.variant = v;
  ctx.d = probe.parse_int();
  probe.expect(',', "','");
  ctx.r = probe.parse_int();
  probe.expect('}', "'}'");
  if (ctx.d < 2) throw ParseError("arity d must be >= 2", c.pos);
  if (ctx.r < 1) throw ParseError("root count r must be >= 1", c.pos);
  c = probe;
  return ctx;
}

std::vector<int> parse_tagged_list(Cursor& c, char tag, const char* what) {
  c.skip_ws();
  std::size_t at = c.pos;
  if (!(c.try_consume(tag) && c.try_consume(':')))
    throw ParseError(std::string("expected ") + what, at);
  return c.parse_int_list_allow_empty('|', ';');
}

Decoration parse_decoration_at(Cursor& c, Variant v, int l) {
  switch (v) {
    case Variant::Perm: {
      std::vector<int> img = parse_tagged_list(c, 'p', "'p:' image list");
      if (static_cast<int>(img.size()) != l)
        throw ParseError("permutation size must equal the leaf count", c.pos);
      return Permutation(std::move(img));
    }
    case Variant::SignedPerm: {
      std::vector<int> signs = parse_tagged_list(c, 's', "'s:' sign list");
      c.expect(';', "';'");
      std::vector<int> img = parse_tagged_list(c, 'p', "'p:' image list");
      if (static_cast<int>(signs.size()) != l || static_cast<int>(img.size()) != l)
        throw ParseError("sign and image lists must equal the leaf count", c.pos);
      return SignedPermutation(std::move(signs), Permutation(std::move(img)));
    }
    case Variant::Braid: {
      std::vector<int> letters = parse_tagged_list(c, 'b', "'b:' letter list");
      return BraidWord(l, std::move(letters));
    }
    default: {
      std::vector<int> twists = parse_tagged_list(c, 't', "'t:' twist list");
      c.expect(';', "';'");
      std::vector<int> letters = parse_tagged_list(c, 'b', "'b:' letter list");
      if (static_cast<int>(twists.size()) != l)
        throw ParseError("twist list must equal the leaf count", c.pos);
      return RibbonBraid(std::move(twists), BraidWord(l, std::move(letters)));
    }
  }
}

std::string int_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string canonical_braid_text(const BraidWord& w) {
  return "b:" + int_list(spell(garside_form(w)).letters());
}

std::string serialize_decoration(const Decoration& dec) {
  switch (dec.index()) {
    case 0:
      return "p:" + int_list(std::get<0>(dec).images());
    case 1: {
      const SignedPermutation& sp = std::get<1>(dec);
      return "s:" + int_list(sp.signs()) + ";p:" + int_list(sp.perm().images());
    }
    case 2:
      return canonical_braid_text(std::get<2>(dec));
    default: {
      const RibbonBraid& rb = std::get<3>(dec);
      return "t:" + int_list(rb.twists()) + ";" + canonical_braid_text(rb.braid());
    }
  }
}

}  // namespace

GroupContext parse_context(std::string_view text) {
  Cursor c{text};
  auto ctx = try_parse_context_at(c);
  if (!ctx) throw ParseError("expected a context like V{2,1}", c.pos);
  if (!c.at_end()) throw ParseError("trailing input after context", c.pos);
  return *ctx;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Perm: return "V";
    case Variant::SignedPerm: return "V2";
    case Variant::Braid: return "bV";
    case Variant::Ribbon: return "RV";
    default: return "RV+";
  }
}

std::string serialize_context(const GroupContext& ctx) {
  return variant_name(ctx.variant) + "{" + std::to_string(ctx.d) + "," +
         std::to_string(ctx.r) + "}";
}

Diagram parse_diagram(std::string_view text, const std::optional<GroupContext>& ctx) {
  Cursor c{text};
  std::optional<GroupContext> prefix = try_parse_context_at(c);
  if (prefix && ctx && !(*prefix == *ctx))
    throw ParseError("literal context disagrees with the expected context", 0);
  if (!prefix && !ctx) throw ParseError("no context given for the diagram", c.pos);
  const GroupContext use = prefix ? *prefix : *ctx;
  c.expect('(', "'('");
  Forest fm = parse_forest_at(c, use.d, use.r);
  c.expect('|', "'|'");
  c.skip_ws();
  const std::size_t dec_pos = c.pos;
  Decoration dec = [&]() -> Decoration {
    try {
      return parse_decoration_at(c, use.variant, fm.leaf_count());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), dec_pos);
    }
  }();
  c.expect('|', "'|'");
  Forest fp = parse_forest_at(c, use.d, use.r);
  c.expect(')', "')'");
  if (!c.at_end()) throw ParseError("trailing input after diagram", c.pos);
  try {
    return Diagram(use, std::move(fm), std::move(dec), std::move(fp));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), dec_pos);
  }
}

std::string serialize_diagram(const Diagram& x) {
  return serialize_context(x.context()) + "(" + serialize_forest(x.source()) + "|" +
         serialize_decoration(x.decoration()) + "|" + serialize_forest(x.target()) + ")";
}

CantorPoint parse_point(std::string_view text, const GroupContext& ctx) {
  Cursor c{text};
  std::vector<int> values;
  while (!c.at_end()) {
    values.push_back(c.parse_int());
    c.try_consume(',');
  }
  CantorPoint p;
  if (ctx.r > 1) {
    if (values.empty()) throw ParseError("expected a root index", 0);
    p.root = values.front();
    p.word.assign(values.begin() + 1, values.end());
  } else {
    p.root = 1;
    p.word = std::move(values);
  }
  if (p.root < 1 || p.root > ctx.r) throw ParseError("root index out of range", 0);
  for (int w : p.word)
    if (w < 1 || w > ctx.d) throw ParseError("word letter out of range", 0);
  return p;
}

std::string serialize_point(const CantorPoint& p, const GroupContext& ctx) {
  std::string out;
  if (ctx.r > 1) out += std::to_string(p.root);
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.word[i]);
  }
  return out;
}

}  // namespace rv
