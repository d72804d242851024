#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parseword/errors.hpp"
#include "parseword/tree.hpp"

namespace parseword {

// The grammar has start symbols 0, 1, 2 and formation rules 0 -> 12 | 21,
// 1 -> 02 | 20, 2 -> 01 | 10: an internal vertex's children carry two distinct
// letters and the vertex carries the third. A tree parses a word when the
// leaves, left to right, can be labeled with the word's letters consistently.

class Word;

namespace detail {
Word word_from_ascii_unchecked(std::string raw);
}

/// Word over the alphabet {0, 1, 2}, stored as ASCII digits.
class Word {
 public:
  Word() = default;
  /// Validates that every character is '0', '1' or '2'.
  explicit Word(std::string_view ascii);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  /// Letter at 0-based position i, as an ASCII digit.
  char at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  /// Letter at 0-based position i, as an integer 0..2.
  int letter(int i) const { return letters_[static_cast<std::size_t>(i)] - '0'; }
  const std::string& ascii() const { return letters_; }

  /// Count of the given letter ('0'..'2').
  int count(char letter) const;

  auto operator<=>(const Word&) const = default;

 private:
  explicit Word(std::string raw, int) : letters_(std::move(raw)) {}
  std::string letters_;

  friend Word detail::word_from_ascii_unchecked(std::string raw);
  friend class WordStream;
};

/// Assignment of a letter to every vertex of some tree, indexed by preorder
/// vertex. Valid iff every internal vertex's children carry distinct letters
/// and the vertex carries the third one.
struct Labeling {
  std::string labels;  // ASCII digits, one per vertex in preorder
  char at(Vertex v) const { return labels[v]; }
  char root_label() const { return labels[0]; }
  auto operator<=>(const Labeling&) const = default;
};

/// Checks the formation-rule invariant at every internal vertex.
bool labeling_consistent(const Tree& t, const Labeling& lab);

/// The word spelled by the leaves of a labeling, left to right.
Word leaf_word(const Tree& t, const Labeling& lab);

// ---- parsing -----------------------------------------------------------------

/// Precomputed traversal data for one tree shape; lets parse/fill run as flat
/// array loops. Build once per tree when checking many words.
class ParsePlan {
 public:
  explicit ParsePlan(const Tree& t);

  const Tree& tree() const { return tree_; }
  int leaf_count() const { return static_cast<int>(leaf_rank_of_.size()) / 2 + 1; }

  /// True when the tree parses `ascii` (letters '0'..'2', length = leaf count).
  /// The overload taking a scratch buffer avoids per-call allocation.
  bool parses(std::string_view ascii) const;
  bool parses(std::string_view ascii, std::string& scratch) const;

  /// Bottom-up labeling; empty optional when no valid labeling exists.
  std::optional<Labeling> run(std::string_view ascii) const;

  std::size_t vertex_count() const { return right_child_.size(); }
  std::size_t right_child(Vertex v) const { return right_child_[v]; }
  bool is_leaf(Vertex v) const { return leaf_rank_of_[v] >= 0; }
  /// 0-based leaf position for leaf vertices, -1 for internal vertices.
  int leaf_rank(Vertex v) const { return leaf_rank_of_[v]; }

 private:
  Tree tree_;
  std::vector<std::size_t> right_child_;  // meaningful at internal vertices
  std::vector<int> leaf_rank_of_;         // -1 at internal vertices
};

/// The unique labeling of t by w, when w is a parse word of t.
/// Throws LengthMismatch when |w| differs from the leaf count.
std::optional<Labeling> parse(const Tree& t, const Word& w);

/// Validity check without materializing the labeling.
bool parses(const Tree& t, const Word& w);

/// The letter r with |w|_r = |w| (mod 2) while the other two counts have the
/// opposite parity; empty when all three counts share one parity (in which
/// case no tree parses w). Whenever some tree parses w, its root label is r.
std::optional<char> root_letter_by_parity(const Word& w);

// ---- word generation -----------------------------------------------------------

/// Streams the 3 * 2^(n-1) distinct (word, labeling) pairs of a tree in
/// lexicographic order of (root letter, per-internal-vertex rule choices).
/// Rule-choice bit 0 orders the two child letters ascending.
class WordStream {
 public:
  explicit WordStream(const Tree& t, bool fix_root_letter_zero = false);

  /// Advances to the next word; false when exhausted.
  bool next();
  const Word& word() const { return word_; }
  const Labeling& labeling() const { return labeling_; }
  std::uint64_t total() const;

 private:
  void fill();
  ParsePlan plan_;
  std::vector<int> internal_rank_of_;
  int internal_count_ = 0;
  int root_letter_ = 0;
  int root_letter_limit_ = 3;
  std::uint64_t bits_ = 0;
  std::uint64_t bits_limit_ = 1;
  bool started_ = false;
  bool done_ = false;
  Word word_;
  Labeling labeling_;
};

/// Visits every (word, labeling) of t; the visitor returns false to stop early.
template <typename Visitor>
void for_each_word(const Tree& t, Visitor&& visit) {
  WordStream stream(t);
  while (stream.next()) {
    if (!visit(stream.word(), stream.labeling())) return;
  }
}

// ---- equivalence classes ---------------------------------------------------------

/// Orbit of a word under the six alphabet permutations, named by its
/// lexicographically least member.
struct WordClass {
  Word canonical;
  auto operator<=>(const WordClass&) const = default;
};

/// Lexicographic minimum of the six permuted images. Equals the
/// first-occurrence relabeling of the word's letters.
WordClass canonicalize(const Word& w);

/// Permutation-invariant pattern flags of a class. Each flag says that some
/// word in the orbit has the literal shape: 00v (starts with a doubled
/// letter), v00 (ends with one), u00v (contains adjacent equal letters),
/// 01v1 (first two distinct, last equals second), 01v00 (first two distinct,
/// doubled final letter equal to the first), 01v2 (first, second and last
/// pairwise distinct). The 01-family flags are meaningful for n >= 3
/// (is_01v00: n >= 4) and false below that.
struct ClassFlags {
  bool has_00v = false;
  bool has_v00 = false;
  bool has_u00v = false;
  bool is_01v1 = false;
  bool is_01v00 = false;
  bool is_01v2 = false;
};

/// Throws TooShort for words of length < 2.
ClassFlags class_predicates(const WordClass& c);

}  // namespace parseword
