#include "parseword/enumeration.hpp"

#include <algorithm>
#include <set>

namespace parseword {

TreePair::TreePair(Tree a, Tree b) : t1(std::move(a)), t2(std::move(b)) {
  if (t1.leaf_count() != t2.leaf_count()) {
    throw LengthMismatch("paired trees must have equal leaf counts");
  }
}

ParseWordSet parse_words(const TreePair& p, EnumMode mode) {
  bool fixed = mode == EnumMode::root_letter_fixed && p.leaf_count() >= 2;
  WordStream stream(p.t1, fixed);
  ParsePlan plan2(p.t2);
  std::string scratch;
  std::set<WordClass> classes;
  std::uint64_t kept = 0;
  while (stream.next()) {
    const Word& w = stream.word();
    if (!plan2.parses(w.ascii(), scratch)) continue;
    ++kept;
    classes.insert(canonicalize(w));
  }
  ParseWordSet out;
  out.classes.assign(classes.begin(), classes.end());
  out.raw_count = fixed ? 3 * kept : kept;
  return out;
}

std::uint64_t count_parse_words(const TreePair& p, EnumMode mode) {
  int n = p.leaf_count();
  if (n == 1) return 1;  // {0, 1, 2} is one class
  bool fixed = mode == EnumMode::root_letter_fixed;
  WordStream stream(p.t1, fixed);
  ParsePlan plan2(p.t2);
  std::string scratch;
  std::uint64_t kept = 0;
  while (stream.next()) {
    if (plan2.parses(stream.word().ascii(), scratch)) ++kept;
  }
  // Each class contributes 6 kept words, of which 2 have root label 0.
  std::uint64_t orbit = fixed ? 2 : 6;
  if (kept % orbit != 0) throw std::logic_error("kept word count not divisible by orbit size");
  return kept / orbit;
}

std::optional<Word> first_common_word(const TreePair& p) {
  return first_common_word_if(p, [](const Word&) { return true; });
}

bool has_common_parse_word(const TreePair& p) {
  return first_common_word(p).has_value();
}

std::vector<Tree> all_trees(int n) {
  if (n < 1) throw BadParams("tree enumeration needs n >= 1");
  std::vector<std::vector<Tree>> lists(static_cast<std::size_t>(n) + 1);
  lists[1].push_back(Tree::leaf());
  for (int m = 2; m <= n; ++m) {
    for (int left = 1; left < m; ++left) {
      for (const Tree& l : lists[static_cast<std::size_t>(left)]) {
        for (const Tree& r : lists[static_cast<std::size_t>(m - left)]) {
          lists[static_cast<std::size_t>(m)].push_back(Tree::internal(l, r));
        }
      }
    }
  }
  return std::move(lists[static_cast<std::size_t>(n)]);
}

std::vector<Tree> all_path_trees(int n) {
  if (n < 2) throw BadParams("path-tree enumeration needs n >= 2");
  int len = n - 2;
  std::vector<Tree> out;
  out.reserve(std::size_t{1} << len);
  std::string letters(static_cast<std::size_t>(len), 'l');
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    for (int d = 0; d < len; ++d) {
      letters[static_cast<std::size_t>(d)] =
          (bits >> (len - 1 - d)) & 1 ? 'r' : 'l';
    }
    out.push_back(decode_path(PathWord(letters)));
  }
  return out;
}

Tree random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw BadParams("random_tree needs n >= 1");
  if (n == 1) return Tree::leaf();
  std::uniform_int_distribution<int> dist(1, n - 1);
  int left = dist(rng);
  Tree l = random_tree(left, rng);
  Tree r = random_tree(n - left, rng);
  return Tree::internal(l, r);
}

std::optional<Word> shared_bottom_witness(const TreePair& p) {
  if (!is_path_tree(p.t1) || !is_path_tree(p.t2)) {
    throw NotPathTrees("shared_bottom_witness needs two path trees");
  }
  int n = p.leaf_count();
  if (n < 3) throw BadParams("shared_bottom_witness needs n >= 3");
  // A path tree has exactly one bottom pair {b, b+1}.
  int b1 = bottom_leaf_pairs(p.t1).front();
  int b2 = bottom_leaf_pairs(p.t2).front();
  int shared = 0;
  for (int i : {b1, b1 + 1}) {
    if (i == b2 || i == b2 + 1) {
      shared = i;
      break;
    }
  }
  if (shared == 0) return std::nullopt;
  int k = shared == 1 ? 2 : (shared == n ? n - 1 : shared);
  std::string ascii(static_cast<std::size_t>(n), '0');
  ascii[static_cast<std::size_t>(k - 1)] = '1';
  Word w = detail::word_from_ascii_unchecked(std::move(ascii));
  if (!parses(p.t1, w) || !parses(p.t2, w)) {
    throw std::logic_error("shared-bottom witness failed verification");
  }
  return w;
}

}  // namespace parseword
