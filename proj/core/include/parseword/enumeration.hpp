#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "parseword/errors.hpp"
#include "parseword/grammar.hpp"
#include "parseword/tree.hpp"

namespace parseword {

/// Two trees with equal leaf counts.
struct TreePair {
  Tree t1;
  Tree t2;
  TreePair(Tree a, Tree b);
  int leaf_count() const { return t1.leaf_count(); }
  auto operator<=>(const TreePair&) const = default;
};

/// The set of word classes parsed by both trees of a pair, plus the raw
/// (pre-deduplication) number of common parse words, which is 6x the class
/// count for n >= 2.
struct ParseWordSet {
  std::vector<WordClass> classes;  // sorted lexicographically
  std::uint64_t raw_count = 0;
  bool operator==(const ParseWordSet&) const = default;
};

enum class EnumMode {
  /// Enumerate all 3 * 2^(n-1) words of t1. The auditable default.
  full,
  /// Enumerate only root-letter-0 words of t1 (a third of the stream); class
  /// sets are unchanged and raw counts are recovered by symmetry.
  root_letter_fixed,
};

/// Streams the words of t1, keeps those t2 also parses, canonicalizes and
/// deduplicates. Classes come out sorted.
ParseWordSet parse_words(const TreePair& p, EnumMode mode = EnumMode::full);

/// |parse_words(p).classes| without materializing the set (kept words / 6).
std::uint64_t count_parse_words(const TreePair& p, EnumMode mode = EnumMode::full);

/// First word of t1 (in stream order) that satisfies the predicate and that
/// t2 also parses.
template <typename Predicate>
std::optional<Word> first_common_word_if(const TreePair& p, Predicate&& pred) {
  WordStream stream(p.t1);
  ParsePlan plan2(p.t2);
  std::string scratch;
  while (stream.next()) {
    const Word& w = stream.word();
    if (pred(w) && plan2.parses(w.ascii(), scratch)) return w;
  }
  return std::nullopt;
}

std::optional<Word> first_common_word(const TreePair& p);
bool has_common_parse_word(const TreePair& p);

// ---- tree spaces -------------------------------------------------------------

/// All n-leaf binary trees (Catalan(n-1) of them), in the recursive
/// increasing-left-size order; the order is part of the contract.
std::vector<Tree> all_trees(int n);

/// All n-leaf path trees (2^(n-2) of them), in lexicographic path-word order
/// (l < r). Requires n >= 2.
std::vector<Tree> all_path_trees(int n);

template <typename Visitor>
void for_each_tree(int n, Visitor&& visit) {
  for (const Tree& t : all_trees(n)) {
    if (!visit(t)) return;
  }
}

template <typename Visitor>
void for_each_path_tree(int n, Visitor&& visit) {
  for (const Tree& t : all_path_trees(n)) {
    if (!visit(t)) return;
  }
}

/// Uniformly random split sizes at every vertex (not uniform over trees;
/// used for randomized campaigns with fixed seeds).
Tree random_tree(int n, std::mt19937_64& rng);

// ---- shared bottom leaves ------------------------------------------------------

/// For two path trees (n >= 3) that have a common bottom leaf i, the word
/// 0^(k-1) 1 0^(n-k) with k = 2 if i = 1, k = n-1 if i = n, else k = i; the
/// word is verified against both trees before being returned. Empty when no
/// bottom leaf is shared. Throws NotPathTrees / BadParams.
std::optional<Word> shared_bottom_witness(const TreePair& p);

}  // namespace parseword
