#include "parseword/tree.hpp"

#include <algorithm>
#include <utility>

namespace parseword {

PathWord::PathWord(std::string s) : letters(std::move(s)) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != 'l' && letters[i] != 'r') {
      throw BadParams("path word letters must be 'l' or 'r'");
    }
  }
}

Tree Tree::cherry() {
  return Tree(std::vector<std::uint8_t>{1, 0, 0});
}

Tree Tree::internal(const Tree& left, const Tree& right) {
  std::vector<std::uint8_t> shape;
  shape.reserve(1 + left.shape_.size() + right.shape_.size());
  shape.push_back(1);
  shape.insert(shape.end(), left.shape_.begin(), left.shape_.end());
  shape.insert(shape.end(), right.shape_.begin(), right.shape_.end());
  return Tree(std::move(shape));
}

bool Tree::is_leaf(Vertex v) const {
  if (v >= shape_.size()) throw IndexOutOfRange("vertex out of range");
  return shape_[v] == 0;
}

Vertex Tree::subtree_end(Vertex v) const {
  if (v >= shape_.size()) throw IndexOutOfRange("vertex out of range");
  std::size_t open = 1;
  std::size_t p = v;
  while (open > 0) {
    open += shape_[p] == 1 ? 1 : static_cast<std::size_t>(-1);
    ++p;
  }
  return p;
}

Vertex Tree::left_child(Vertex v) const {
  if (is_leaf(v)) throw IndexOutOfRange("leaf has no children");
  return v + 1;
}

Vertex Tree::right_child(Vertex v) const {
  if (is_leaf(v)) throw IndexOutOfRange("leaf has no children");
  return subtree_end(v + 1);
}

std::optional<Vertex> Tree::parent(Vertex v) const {
  if (v >= shape_.size()) throw IndexOutOfRange("vertex out of range");
  if (v == 0) return std::nullopt;
  // The parent is the nearest preceding vertex whose subtree covers v.
  for (Vertex p = v; p-- > 0;) {
    if (shape_[p] == 1 && subtree_end(p) > v) return p;
  }
  return std::nullopt;  // unreachable on well-formed shapes
}

Vertex Tree::leaf_vertex(int i) const {
  if (i < 1 || i > leaf_count()) throw IndexOutOfRange("leaf index out of range");
  int seen = 0;
  for (Vertex v = 0; v < shape_.size(); ++v) {
    if (shape_[v] == 0 && ++seen == i) return v;
  }
  throw IndexOutOfRange("leaf index out of range");
}

int Tree::leaf_index(Vertex v) const {
  if (!is_leaf(v)) throw IndexOutOfRange("vertex is not a leaf");
  int idx = 0;
  for (Vertex p = 0; p <= v; ++p) {
    if (shape_[p] == 0) ++idx;
  }
  return idx;
}

namespace detail {

Tree tree_from_shape(std::vector<std::uint8_t> shape) {
  // A well-formed preorder shape keeps a positive pending-vertex balance that
  // hits zero exactly at the end.
  long long open = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] != 0 && shape[i] != 1) throw BadParams("shape entries must be 0 or 1");
    if (open <= 0) throw BadParams("malformed preorder shape");
    open += shape[i] == 1 ? 1 : -1;
  }
  if (open != 0) throw BadParams("malformed preorder shape");
  return Tree(std::move(shape));
}

}  // namespace detail

Tree decode_path(const PathWord& p) {
  // Build back-to-front: the bottom cherry, then one leaf per level upward.
  Tree t = Tree::cherry();
  for (std::size_t d = p.letters.size(); d-- > 0;) {
    t = p.letters[d] == 'l' ? Tree::internal(t, Tree::leaf())
                            : Tree::internal(Tree::leaf(), t);
  }
  return t;
}

PathWord encode_path(const Tree& t) {
  if (t.leaf_count() < 2) throw NotAPathTree("the single leaf is not a path tree");
  std::string letters;
  Vertex v = t.root();
  while (true) {
    Vertex l = t.left_child(v);
    Vertex r = t.right_child(v);
    bool li = !t.is_leaf(l);
    bool ri = !t.is_leaf(r);
    if (li && ri) throw NotAPathTree("a level has more than two vertices");
    if (!li && !ri) break;  // bottom cherry
    letters.push_back(li ? 'l' : 'r');
    v = li ? l : r;
  }
  return PathWord(std::move(letters));
}

bool is_path_tree(const Tree& t) {
  if (t.leaf_count() < 2) return false;
  Vertex v = t.root();
  while (true) {
    Vertex l = t.left_child(v);
    Vertex r = t.right_child(v);
    bool li = !t.is_leaf(l);
    bool ri = !t.is_leaf(r);
    if (li && ri) return false;
    if (!li && !ri) return true;
    v = li ? l : r;
  }
}

namespace {

std::string repeated(char c, int count) { return std::string(static_cast<std::size_t>(count), c); }

}  // namespace

Tree left_comb_tree(int n) {
  if (n < 2) throw BadParams("comb trees need n >= 2");
  return decode_path(PathWord(repeated('l', n - 2)));
}

Tree right_comb_tree(int n) {
  if (n < 2) throw BadParams("comb trees need n >= 2");
  return decode_path(PathWord(repeated('r', n - 2)));
}

Tree left_turn_tree(int m, int n) {
  if (m < 1 || n < 2) throw BadParams("turn trees need m >= 1, n >= 2");
  return decode_path(PathWord(repeated('l', m) + repeated('r', n - 2)));
}

Tree right_turn_tree(int m, int n) {
  if (m < 1 || n < 2) throw BadParams("turn trees need m >= 1, n >= 2");
  return decode_path(PathWord(repeated('r', m) + repeated('l', n - 2)));
}

namespace {

std::string truncated_alternation(char first, char second, int len) {
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.push_back(i % 2 == 0 ? first : second);
  return out;
}

}  // namespace

Tree left_crooked_tree(int n) {
  if (n < 2) throw BadParams("crooked trees need n >= 2");
  return decode_path(PathWord(truncated_alternation('l', 'r', n - 2)));
}

Tree right_crooked_tree(int n) {
  if (n < 2) throw BadParams("crooked trees need n >= 2");
  return decode_path(PathWord(truncated_alternation('r', 'l', n - 2)));
}

Tree make_family(FamilyKind kind, int a, int b) {
  switch (kind) {
    case FamilyKind::left_comb: return left_comb_tree(a);
    case FamilyKind::right_comb: return right_comb_tree(a);
    case FamilyKind::left_turn: return left_turn_tree(a, b);
    case FamilyKind::right_turn: return right_turn_tree(a, b);
    case FamilyKind::left_crooked: return left_crooked_tree(a);
    case FamilyKind::right_crooked: return right_crooked_tree(a);
  }
  throw BadParams("unknown family kind");
}

int leaf_level(const Tree& t, int i) {
  Vertex target = t.leaf_vertex(i);
  int level = 0;
  Vertex v = t.root();
  while (v != target) {
    Vertex l = t.left_child(v);
    Vertex r = t.right_child(v);
    v = target < r ? l : r;
    ++level;
  }
  return level;
}

std::vector<int> bottom_leaf_pairs(const Tree& t) {
  std::vector<int> sites;
  const auto& shape = t.shape();
  int leaves_seen = 0;
  for (std::size_t v = 0; v < shape.size(); ++v) {
    if (shape[v] == 0) {
      ++leaves_seen;
    } else if (v + 2 < shape.size() && shape[v + 1] == 0 && shape[v + 2] == 0) {
      sites.push_back(leaves_seen + 1);
    }
  }
  return sites;
}

LeafInterval subtree_span(const Tree& t, Vertex v) {
  Vertex end = t.subtree_end(v);
  const auto& shape = t.shape();
  int before = 0;
  for (Vertex p = 0; p < v; ++p) before += shape[p] == 0;
  int inside = 0;
  for (Vertex p = v; p < end; ++p) inside += shape[p] == 0;
  return LeafInterval{before + 1, before + inside};
}

std::optional<Vertex> vertex_with_span(const Tree& t, const LeafInterval& s) {
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (subtree_span(t, v) == s) return v;
  }
  return std::nullopt;
}

Tree subtree_at(const Tree& t, Vertex v) {
  Vertex end = t.subtree_end(v);
  return detail::tree_from_shape(std::vector<std::uint8_t>(t.shape().begin() + static_cast<long>(v),
                                                   t.shape().begin() + static_cast<long>(end)));
}

Tree replace_subtree(const Tree& t, Vertex v, const Tree& sub) {
  Vertex end = t.subtree_end(v);
  std::vector<std::uint8_t> shape;
  shape.reserve(t.vertex_count() - (end - v) + sub.vertex_count());
  shape.insert(shape.end(), t.shape().begin(), t.shape().begin() + static_cast<long>(v));
  shape.insert(shape.end(), sub.shape().begin(), sub.shape().end());
  shape.insert(shape.end(), t.shape().begin() + static_cast<long>(end), t.shape().end());
  return detail::tree_from_shape(std::move(shape));
}

namespace {

void reflect_rec(const Tree& t, Vertex v, std::vector<std::uint8_t>& out) {
  if (t.is_leaf(v)) {
    out.push_back(0);
    return;
  }
  out.push_back(1);
  reflect_rec(t, t.right_child(v), out);
  reflect_rec(t, t.left_child(v), out);
}

}  // namespace

Tree reflect(const Tree& t) {
  std::vector<std::uint8_t> shape;
  shape.reserve(t.vertex_count());
  reflect_rec(t, t.root(), shape);
  return detail::tree_from_shape(std::move(shape));
}

std::string serialize(const Tree& t) {
  std::string out;
  out.reserve(2 * t.vertex_count());
  std::vector<Vertex> pending;  // subtree ends awaiting their ')'
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.shape()[v] == 1) {
      out.push_back('(');
      pending.push_back(t.subtree_end(v));
    } else {
      out.push_back('*');
      while (!pending.empty() && pending.back() == v + 1) {
        out.push_back(')');
        pending.pop_back();
      }
    }
  }
  return out;
}

namespace {

void parse_tree_literal(std::string_view text, std::size_t& pos, std::vector<std::uint8_t>& shape) {
  if (pos >= text.size()) throw ParseError("unexpected end of tree literal", pos);
  char c = text[pos];
  if (c == '*') {
    shape.push_back(0);
    ++pos;
    return;
  }
  if (c == '(') {
    shape.push_back(1);
    ++pos;
    parse_tree_literal(text, pos, shape);
    parse_tree_literal(text, pos, shape);
    if (pos >= text.size() || text[pos] != ')') {
      throw ParseError("expected ')'", pos);
    }
    ++pos;
    return;
  }
  throw ParseError("expected '*' or '('", pos);
}

}  // namespace

Tree deserialize(std::string_view text) {
  constexpr std::string_view kPathPrefix = "path:";
  if (text.substr(0, kPathPrefix.size()) == kPathPrefix) {
    std::string_view letters = text.substr(kPathPrefix.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] != 'l' && letters[i] != 'r') {
        throw ParseError("path letters must be 'l' or 'r'", kPathPrefix.size() + i);
      }
    }
    return decode_path(PathWord(std::string(letters)));
  }
  std::size_t pos = 0;
  std::vector<std::uint8_t> shape;
  parse_tree_literal(text, pos, shape);
  if (pos != text.size()) throw ParseError("trailing characters after tree literal", pos);
  return detail::tree_from_shape(std::move(shape));
}

}  // namespace parseword
