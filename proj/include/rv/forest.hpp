#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rv/error.hpp"

namespace rv {

// A finite rooted d-ary tree as an immutable value: a node is either a leaf
// or carries exactly d ordered subtrees. The arity d lives on the enclosing
// Forest; Tree itself only promises that every internal node of a valid
// (d,r)-forest has d children.
class Tree {
 public:
  Tree() = default;  // leaf
  explicit Tree(std::vector<Tree> children) : kids_(std::move(children)) {}

  bool leaf() const { return kids_.empty(); }
  const std::vector<Tree>& children() const { return kids_; }
  int leaf_count() const;
  int depth() const;

  bool operator==(const Tree&) const = default;

 private:
  std::vector<Tree> kids_;
};

// Address of a vertex: which root, then the child path (letters 1..d).
struct LeafAddress {
  int root = 1;
  std::vector<int> path;
  bool operator==(const LeafAddress&) const = default;
};

// An elementary caret: an internal node all of whose children are leaves,
// reported with the global index of its leftmost leaf.
struct CaretRef {
  LeafAddress node;
  int first_leaf = 0;
};

// An ordered sequence of r d-ary trees. Leaves are numbered 1..l left to
// right across the whole forest; one caret always contributes d-1 leaves,
// so l == r (mod d-1).
class Forest {
 public:
  Forest(int arity, std::vector<Tree> roots);
  static Forest trivial(int arity, int root_count);

  int arity() const { return d_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  const std::vector<Tree>& roots() const { return roots_; }

  int leaf_count() const;
  int caret_count() const;  // number of internal nodes
  int depth() const;

  std::vector<CaretRef> elementary_carets() const;

  // Replaces leaf `i` (1-based, global) by a caret of d leaves.
  Forest split_leaf(int i) const;

  // Inverse of split_leaf: removes the elementary caret spanning leaves
  // first_leaf .. first_leaf+d-1. Throws if there is no such caret.
  Forest remove_elementary_caret(int first_leaf) const;

  LeafAddress leaf_address(int i) const;
  int leaf_at(const LeafAddress& a) const;

  // True if this forest can be grown into `bigger` by splitting leaves.
  bool prefix_of(const Forest& bigger) const;

  bool operator==(const Forest&) const = default;

 private:
  int d_;
  std::vector<Tree> roots_;
};

// Least common refinement of two (d,r)-forests together with the canonical
// expansion sequences reaching it: applying split_leaf along exp_left to
// `left` (in order) yields h, likewise exp_right on `right`. Each sequence
// always splits the leftmost leaf that is still internal in h.
struct JoinResult {
  Forest h;
  std::vector<int> exp_left;
  std::vector<int> exp_right;
};

JoinResult join(const Forest& left, const Forest& right);

// Grammar:  forest := tree ("+" tree)*   — exactly r trees
//           tree   := "." | "(" tree ("," tree){d-1} ")"
// Canonical text has no whitespace; the parser skips it. d and r come from
// context and are validated, never inferred.
Forest parse_forest(std::string_view text, int arity, int root_count);
std::string serialize_forest(const Forest& f);

}  // namespace rv
