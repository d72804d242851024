#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parseword/errors.hpp"

namespace parseword {

/// A vertex handle: the vertex's index in the preorder traversal of its tree.
using Vertex = std::size_t;

/// Closed interval [lo..hi] of 1-based leaf indices.
struct LeafInterval {
  int lo = 1;
  int hi = 1;
  int length() const { return hi - lo + 1; }
  auto operator<=>(const LeafInterval&) const = default;
};

/// Word over {l, r}; the letter at position d says which child of the level-d
/// internal vertex of a path tree is itself internal.
struct PathWord {
  std::string letters;
  PathWord() = default;
  explicit PathWord(std::string s);
  auto operator<=>(const PathWord&) const = default;
};

class Tree;

namespace detail {
/// Builds a Tree directly from a preorder shape sequence. Validates.
Tree tree_from_shape(std::vector<std::uint8_t> shape);
}  // namespace detail

/// Immutable rooted ordered binary tree: every vertex has 0 or 2 children.
///
/// The tree is stored as its preorder shape sequence (1 = internal, 0 = leaf).
/// Leaves appear in the sequence in left-to-right order, so the i-th 0 is leaf
/// i (1-based). Structural equality and ordering are sequence comparisons.
class Tree {
 public:
  Tree() : shape_{0} {}
  static Tree leaf() { return Tree(); }
  static Tree cherry();
  static Tree internal(const Tree& left, const Tree& right);

  int leaf_count() const { return static_cast<int>((shape_.size() + 1) / 2); }
  std::size_t vertex_count() const { return shape_.size(); }

  bool is_leaf(Vertex v) const;
  Vertex root() const { return 0; }
  Vertex left_child(Vertex v) const;
  Vertex right_child(Vertex v) const;
  /// One past the last vertex of the subtree rooted at v, in preorder.
  Vertex subtree_end(Vertex v) const;
  std::optional<Vertex> parent(Vertex v) const;

  /// Vertex of the leaf with 1-based index i.
  Vertex leaf_vertex(int i) const;
  /// 1-based index of a leaf vertex.
  int leaf_index(Vertex v) const;

  const std::vector<std::uint8_t>& shape() const { return shape_; }

  auto operator<=>(const Tree&) const = default;

 private:
  explicit Tree(std::vector<std::uint8_t> shape) : shape_(std::move(shape)) {}
  std::vector<std::uint8_t> shape_;

  friend Tree detail::tree_from_shape(std::vector<std::uint8_t>);
};

// ---- path-tree encoding ----------------------------------------------------

/// Decodes a path word into the unique (|p|+2)-leaf path tree.
Tree decode_path(const PathWord& p);
/// Inverse of decode_path. Throws NotAPathTree when some level has three or
/// more vertices (or the tree is the single leaf).
PathWord encode_path(const Tree& t);
/// True when t has n >= 2 leaves and at most two vertices per level.
bool is_path_tree(const Tree& t);

// ---- tree families ----------------------------------------------------------

Tree left_comb_tree(int n);                // path word l^(n-2), n >= 2
Tree right_comb_tree(int n);               // r^(n-2), n >= 2
Tree left_turn_tree(int m, int n);         // l^m r^(n-2), m >= 1, n >= 2
Tree right_turn_tree(int m, int n);        // r^m l^(n-2)
Tree left_crooked_tree(int n);             // (lr)^((n-2)/2) truncated, n >= 2
Tree right_crooked_tree(int n);            // (rl)^((n-2)/2) truncated

enum class FamilyKind {
  left_comb,
  right_comb,
  left_turn,
  right_turn,
  left_crooked,
  right_crooked,
};

/// Dispatching constructor. Combs and crooked trees take (n); turn trees take
/// (m, n). Throws BadParams on out-of-range parameters.
Tree make_family(FamilyKind kind, int a, int b = 0);

// ---- geometry ----------------------------------------------------------------

/// Level (distance from the root, root = level 0) of the leaf with 1-based
/// index i. Throws IndexOutOfRange.
int leaf_level(const Tree& t, int i);

/// All i such that leaves i and i+1 are siblings. Nonempty for n >= 2; has at
/// least two entries when t is not a path tree.
std::vector<int> bottom_leaf_pairs(const Tree& t);

/// The contiguous interval of leaf indices below v.
LeafInterval subtree_span(const Tree& t, Vertex v);

/// The vertex whose span is exactly `s`, if one exists.
std::optional<Vertex> vertex_with_span(const Tree& t, const LeafInterval& s);

/// A copy of the subtree rooted at v, as a standalone Tree.
Tree subtree_at(const Tree& t, Vertex v);

/// A copy of t with the subtree rooted at v replaced by `sub`.
Tree replace_subtree(const Tree& t, Vertex v, const Tree& sub);

/// Left-right mirror image.
Tree reflect(const Tree& t);

// ---- serialization ------------------------------------------------------------

/// ASCII literal: tree := "*" | "(" tree tree ")". Whitespace-free.
std::string serialize(const Tree& t);

/// Parses the literal grammar above; additionally accepts "path:<letters>"
/// with letters over {l, r} (decode_path delegation). Throws ParseError with
/// the byte offset of the first offending character.
Tree deserialize(std::string_view text);

}  // namespace parseword
