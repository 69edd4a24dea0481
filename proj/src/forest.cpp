#include "rv/forest.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rv {

int Tree::leaf_count() const {
  if (leaf()) return 1;
  int n = 0;
  for (const Tree& k : kids_) n += k.leaf_count();
  return n;
}

int Tree::depth() const {
  if (leaf()) return 0;
  int m = 0;
  for (const Tree& k : kids_) m = std::max(m, k.depth());
  return m + 1;
}

Forest::Forest(int arity, std::vector<Tree> roots) : d_(arity), roots_(std::move(roots)) {
  if (d_ < 2) throw std::invalid_argument("forest arity must be >= 2");
  if (roots_.empty()) throw std::invalid_argument("forest needs at least one root");
}

Forest Forest::trivial(int arity, int root_count) {
  if (root_count < 1) throw std::invalid_argument("forest needs at least one root");
  return Forest(arity, std::vector<Tree>(root_count));
}

int Forest::leaf_count() const {
  int n = 0;
  for (const Tree& t : roots_) n += t.leaf_count();
  return n;
}

namespace {

int count_internal(const Tree& t) {
  if (t.leaf()) return 0;
  int n = 1;
  for (const Tree& k : t.children()) n += count_internal(k);
  return n;
}

void collect_carets(const Tree& t, int root, std::vector<int>& path, int& next_leaf,
                    std::vector<CaretRef>& out) {
  if (t.leaf()) {
    ++next_leaf;
    return;
  }
  bool all_leaves = true;
  for (const Tree& k : t.children())
    if (!k.leaf()) all_leaves = false;
  if (all_leaves) {
    out.push_back(CaretRef{LeafAddress{root, path}, next_leaf + 1});
    next_leaf += static_cast<int>(t.children().size());
    return;
  }
  for (std::size_t c = 0; c < t.children().size(); ++c) {
    path.push_back(static_cast<int>(c) + 1);
    collect_carets(t.children()[c], root, path, next_leaf, out);
    path.pop_back();
  }
}

// Rebuilds `t` with leaf number `target` (counting from *counter+1) replaced
// by a caret of `d` leaves. *counter advances past t's leaves.
Tree split_in_tree(const Tree& t, int d, int target, int& counter, bool& done) {
  if (t.leaf()) {
    ++counter;
    if (counter == target) {
      done = true;
      return Tree(std::vector<Tree>(d));
    }
    return t;
  }
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const Tree& k : t.children())
    kids.push_back(done ? k : split_in_tree(k, d, target, counter, done));
  return Tree(std::move(kids));
}

// Replaces the elementary caret whose first leaf is `target` by a leaf.
Tree unsplit_in_tree(const Tree& t, int target, int& counter, bool& done) {
  if (t.leaf()) {
    ++counter;
    return t;
  }
  bool all_leaves = true;
  for (const Tree& k : t.children())
    if (!k.leaf()) all_leaves = false;
  if (all_leaves && counter + 1 == target) {
    counter += static_cast<int>(t.children().size());
    done = true;
    return Tree();
  }
  std::vector<Tree> kids;
  kids.reserve(t.children().size());
  for (const Tree& k : t.children())
    kids.push_back(done ? k : unsplit_in_tree(k, target, counter, done));
  return Tree(std::move(kids));
}

bool tree_prefix_of(const Tree& a, const Tree& b) {
  if (a.leaf()) return true;
  if (b.leaf()) return false;
  for (std::size_t c = 0; c < a.children().size(); ++c)
    if (!tree_prefix_of(a.children()[c], b.children()[c])) return false;
  return true;
}

Tree tree_union(const Tree& a, const Tree& b) {
  if (a.leaf()) return b;
  if (b.leaf()) return a;
  std::vector<Tree> kids;
  kids.reserve(a.children().size());
  for (std::size_t c = 0; c < a.children().size(); ++c)
    kids.push_back(tree_union(a.children()[c], b.children()[c]));
  return Tree(std::move(kids));
}

const Tree* descend(const Tree* t, const std::vector<int>& path) {
  for (int c : path) {
    if (t->leaf() || c < 1 || c > static_cast<int>(t->children().size())) return nullptr;
    t = &t->children()[c - 1];
  }
  return t;
}

}  // namespace

int Forest::caret_count() const {
  int n = 0;
  for (const Tree& t : roots_) n += count_internal(t);
  return n;
}

int Forest::depth() const {
  int m = 0;
  for (const Tree& t : roots_) m = std::max(m, t.depth());
  return m;
}

std::vector<CaretRef> Forest::elementary_carets() const {
  std::vector<CaretRef> out;
  int next_leaf = 0;
  std::vector<int> path;
  for (int r = 0; r < root_count(); ++r)
    collect_carets(roots_[r], r + 1, path, next_leaf, out);
  return out;
}

Forest Forest::split_leaf(int i) const {
  if (i < 1 || i > leaf_count()) throw std::out_of_range("leaf index out of range");
  std::vector<Tree> roots = roots_;
  int counter = 0;
  bool done = false;
  for (Tree& t : roots) {
    if (done) break;
    t = split_in_tree(t, d_, i, counter, done);
  }
  return Forest(d_, std::move(roots));
}

Forest Forest::remove_elementary_caret(int first_leaf) const {
  std::vector<Tree> roots = roots_;
  int counter = 0;
  bool done = false;
  for (Tree& t : roots) {
    if (done) break;
    t = unsplit_in_tree(t, first_leaf, counter, done);
  }
  if (!done) throw std::invalid_argument("no elementary caret at the given leaf position");
  return Forest(d_, std::move(roots));
}

LeafAddress Forest::leaf_address(int i) const {
  if (i < 1 || i > leaf_count()) throw std::out_of_range("leaf index out of range");
  int remaining = i;
  for (int r = 0; r < root_count(); ++r) {
    int n = roots_[r].leaf_count();
    if (remaining <= n) {
      LeafAddress a{r + 1, {}};
      const Tree* t = &roots_[r];
      while (!t->leaf()) {
        for (std::size_t c = 0; c < t->children().size(); ++c) {
          int cn = t->children()[c].leaf_count();
          if (remaining <= cn) {
            a.path.push_back(static_cast<int>(c) + 1);
            t = &t->children()[c];
            break;
          }
          remaining -= cn;
        }
      }
      return a;
    }
    remaining -= n;
  }
  throw std::logic_error("unreachable");
}

int Forest::leaf_at(const LeafAddress& a) const {
  if (a.root < 1 || a.root > root_count()) throw std::out_of_range("root index out of range");
  int base = 0;
  for (int r = 0; r < a.root - 1; ++r) base += roots_[r].leaf_count();
  const Tree* t = &roots_[a.root - 1];
  for (int c : a.path) {
    if (t->leaf() || c < 1 || c > static_cast<int>(t->children().size()))
      throw std::invalid_argument("invalid leaf address");
    for (int b = 0; b < c - 1; ++b) base += t->children()[b].leaf_count();
    t = &t->children()[c - 1];
  }
  if (!t->leaf()) throw std::invalid_argument("address does not end at a leaf");
  return base + 1;
}

bool Forest::prefix_of(const Forest& bigger) const {
  if (d_ != bigger.d_ || root_count() != bigger.root_count()) return false;
  for (int r = 0; r < root_count(); ++r)
    if (!tree_prefix_of(roots_[r], bigger.roots_[r])) return false;
  return true;
}

JoinResult join(const Forest& left, const Forest& right) {
  if (left.arity() != right.arity() || left.root_count() != right.root_count())
    throw std::invalid_argument("join requires matching arity and root count");
  std::vector<Tree> roots;
  roots.reserve(left.root_count());
  for (int r = 0; r < left.root_count(); ++r)
    roots.push_back(tree_union(left.roots()[r], right.roots()[r]));
  Forest h(left.arity(), std::move(roots));

  auto expansion_seq = [&h](Forest cur) {
    std::vector<int> seq;
    for (;;) {
      int l = cur.leaf_count();
      int pick = 0;
      for (int i = 1; i <= l; ++i) {
        LeafAddress a = cur.leaf_address(i);
        const Tree* node = descend(&h.roots()[a.root - 1], a.path);
        if (node && !node->leaf()) {
          pick = i;
          break;
        }
      }
      if (pick == 0) break;
      seq.push_back(pick);
      cur = cur.split_leaf(pick);
    }
    return seq;
  };

  JoinResult out{h, expansion_seq(left), expansion_seq(right)};
  return out;
}

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
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }
};

Tree parse_tree(Cursor& c, int d) {
  char ch = c.peek();
  if (ch == '.') {
    ++c.pos;
    return Tree();
  }
  if (ch != '(') throw ParseError("expected '.' or '('", c.pos);
  ++c.pos;
  std::vector<Tree> kids;
  kids.reserve(d);
  kids.push_back(parse_tree(c, d));
  for (int k = 1; k < d; ++k) {
    c.expect(',', "',' (node arity must equal d)");
    kids.push_back(parse_tree(c, d));
  }
  c.expect(')', "')' (node arity must equal d)");
  return Tree(std::move(kids));
}

void serialize_tree(const Tree& t, std::string& out) {
  if (t.leaf()) {
    out += '.';
    return;
  }
  out += '(';
  for (std::size_t c = 0; c < t.children().size(); ++c) {
    if (c) out += ',';
    serialize_tree(t.children()[c], out);
  }
  out += ')';
}

}  // namespace

Forest parse_forest(std::string_view text, int arity, int root_count) {
  Cursor c{text};
  std::vector<Tree> roots;
  roots.reserve(root_count);
  roots.push_back(parse_tree(c, arity));
  for (int r = 1; r < root_count; ++r) {
    c.expect('+', "'+' (forest must have exactly r trees)");
    roots.push_back(parse_tree(c, arity));
  }
  if (!c.at_end()) throw ParseError("trailing input after forest", c.pos);
  return Forest(arity, std::move(roots));
}

std::string serialize_forest(const Forest& f) {
  std::string out;
  for (int r = 0; r < f.root_count(); ++r) {
    if (r) out += '+';
    serialize_tree(f.roots()[r], out);
  }
  return out;
}

}  // namespace rv
