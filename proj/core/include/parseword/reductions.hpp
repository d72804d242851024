#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/tree.hpp"

namespace parseword {

// Reduction machinery: cherry attachment/removal, leaf duplication and
// triplication with their inverses, decomposable-pair detection, crookedness
// predicates, and a recursive generate-and-verify solver.

/// Leaf i becomes an internal vertex with two leaf children (n grows by 1).
Tree attach_cherry(const Tree& t, int i);

/// Inverse of attach_cherry: leaves i and i+1 must be siblings; they collapse
/// into a single leaf. Throws BadParams when they are not siblings.
Tree remove_cherry(const Tree& t, int i);

/// True when leaves i and i+1 are siblings.
bool cherry_at(const Tree& t, int i);

/// Detaches leaf i's sibling subtree S, hangs a cherry in its place, and
/// reattaches S so that leaves i and i+1 of the result are both left leaves
/// (when leaf i was a left leaf) or both right leaves, on consecutive levels.
/// Throws RootLeaf for the 1-leaf tree.
Tree duplicate_leaf(const Tree& t, int i);

/// duplicate_leaf applied twice at the same site: three same-orientation
/// leaves i, i+1, i+2 on consecutive levels.
Tree triplicate_leaf(const Tree& t, int i);

/// Uncle-nephew test: leaf i is the left child of some vertex whose right
/// child is internal with leaf i+1 as its left child, or the mirror image.
/// Exactly the sites where the tree is the image of duplicate_leaf.
bool duplicable_at(const Tree& t, int i);

/// The two-step same-orientation pattern (image of triplicate_leaf).
bool triplicable_at(const Tree& t, int i);

/// Inverse of duplicate_leaf / triplicate_leaf at site i.
/// Throw BadParams when the pattern is absent.
Tree unduplicate_leaf(const Tree& t, int i);
Tree untriplicate_leaf(const Tree& t, int i);

/// Sites where a pair could have come from duplicating / triplicating a leaf
/// of a smaller pair (the pattern must hold in both trees, each with its own
/// orientation).
struct CrookednessReport {
  std::vector<int> duplicable_sites;
  std::vector<int> triplicable_sites;
  bool mutually_crooked() const { return duplicable_sites.empty(); }
  bool weakly_mutually_crooked() const { return triplicable_sites.empty(); }
};

CrookednessReport crookedness(const TreePair& p);

/// All leaf intervals [i..j] with 1 < j-i+1 < n that are subtree spans in
/// both trees, sorted by (lo, hi). Empty iff the pair is indecomposable.
std::vector<LeafInterval> find_decompositions(const TreePair& p);

/// Inserts two copies of w_i after position i (1-based).
Word triplication_word_lift(const Word& w, int i);

/// One reduction performed by splice_solve, with the residue pair(s) it
/// recursed into (two residues for Decompose: quotient then subtree pair).
struct ReductionStep {
  enum class Kind { bottom_bottom, bottom_comb, unduplicate, untriplicate, decompose };
  Kind kind;
  LeafInterval site;
  std::vector<TreePair> residues;
};

std::string to_string(ReductionStep::Kind kind);

struct SpliceResult {
  std::optional<Word> word;
  std::vector<ReductionStep> trace;
  /// True when some recursion level fell back to brute-force enumeration.
  bool used_brute_force = false;
};

/// Recursively reduces the pair (decompose, then untriplicate, unduplicate,
/// shared-cherry removal, bottom-comb), solves residues, extends the residue
/// word with the constant-size candidate set implied by the corresponding
/// reduction law, and verifies every extension by parsing both trees. Falls
/// back to brute-force enumeration when no reduction produces a verified
/// word, so the result is a word iff the pair has a common parse word.
SpliceResult splice_solve_traced(const TreePair& p);
std::optional<Word> splice_solve(const TreePair& p);

}  // namespace parseword
