#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "parseword/closed_forms.hpp"
#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/reductions.hpp"
#include "parseword/tree.hpp"

using namespace parseword;

TEST_CASE("attach and remove cherries") {
  CHECK(attach_cherry(Tree::leaf(), 1) == Tree::cherry());
  CHECK(attach_cherry(Tree::cherry(), 1) == left_comb_tree(3));
  CHECK(attach_cherry(Tree::cherry(), 2) == right_comb_tree(3));
  CHECK_THROWS_AS(attach_cherry(Tree::cherry(), 3), IndexOutOfRange);

  CHECK(remove_cherry(left_comb_tree(3), 1) == Tree::cherry());
  CHECK_THROWS_AS(remove_cherry(left_comb_tree(4), 2), BadParams);
  CHECK(cherry_at(left_comb_tree(4), 1));
  CHECK(!cherry_at(left_comb_tree(4), 2));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Tree t = random_tree(n, rng);
    int site = 1 + static_cast<int>(rng() % n);
    CHECK(remove_cherry(attach_cherry(t, site), site) == t);
  }
}

TEST_CASE("duplicate_leaf follows the detach-reattach recipe") {
  CHECK(duplicate_leaf(Tree::cherry(), 1) == right_comb_tree(3));
  CHECK(duplicate_leaf(Tree::cherry(), 2) == left_comb_tree(3));
  CHECK_THROWS_AS(duplicate_leaf(Tree::leaf(), 1), RootLeaf);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Tree t = random_tree(n, rng);
    int site = 1 + static_cast<int>(rng() % n);
    Tree extended = duplicate_leaf(t, site);
    CHECK(extended.leaf_count() == n + 1);
    // The two leaves sit on consecutive levels and form the pattern.
    CHECK(duplicable_at(extended, site));
    int d = leaf_level(extended, site) - leaf_level(extended, site + 1);
    CHECK((d == 1 || d == -1));
    CHECK(unduplicate_leaf(extended, site) == t);
  }
}

TEST_CASE("triplicate_leaf inserts two cherries") {
  Tree from_cherry = triplicate_leaf(Tree::cherry(), 1);
  CHECK(from_cherry.leaf_count() == 4);
  CHECK(triplicable_at(from_cherry, 1));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Tree t = random_tree(n, rng);
    int site = 1 + static_cast<int>(rng() % n);
    Tree extended = triplicate_leaf(t, site);
    CHECK(extended.leaf_count() == n + 2);
    CHECK(triplicable_at(extended, site));
    CHECK(untriplicate_leaf(extended, site) == t);
  }
  CHECK_THROWS_AS(untriplicate_leaf(left_crooked_tree(6), 2), BadParams);
}

TEST_CASE("crookedness of the named families") {
  // The motivating seven-leaf pair is handled in the enumeration tests; here
  // the crooked-crooked pairs and the comb examples.
  for (int n = 4; n <= 10; ++n) {
    CHECK(crookedness(TreePair(left_crooked_tree(n), right_crooked_tree(n)))
              .mutually_crooked());
  }
  for (int n = 5; n <= 9; ++n) {
    Tree comb = left_comb_tree(n);
    for (const Tree& t : all_path_trees(n)) {
      CHECK(!crookedness(TreePair(comb, t)).mutually_crooked());
    }
  }
  // Opposite combs share the duplicable site in mirrored orientations.
  CrookednessReport combs = crookedness(TreePair(left_comb_tree(4), right_comb_tree(4)));
  CHECK(combs.duplicable_sites == std::vector<int>{2});
  CHECK(!combs.mutually_crooked());
}

TEST_CASE("find_decompositions") {
  for (int n = 4; n <= 10; ++n) {
    CHECK(find_decompositions(TreePair(left_comb_tree(n), right_comb_tree(n))).empty());
    CHECK(find_decompositions(TreePair(left_comb_tree(n), right_crooked_tree(n))).empty());
    auto intervals = find_decompositions(TreePair(left_comb_tree(n), left_crooked_tree(n)));
    CHECK(std::find(intervals.begin(), intervals.end(), LeafInterval{1, n - 1}) !=
          intervals.end());
  }

  // Symmetry in the pair and reflection invariance with interval mirroring.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    TreePair pair(random_tree(n, rng), random_tree(n, rng));
    auto forward = find_decompositions(pair);
    CHECK(forward == find_decompositions(TreePair(pair.t2, pair.t1)));
    auto mirrored = find_decompositions(TreePair(reflect(pair.t1), reflect(pair.t2)));
    std::vector<LeafInterval> expected;
    for (const LeafInterval& s : forward) {
      expected.push_back(LeafInterval{n + 1 - s.hi, n + 1 - s.lo});
    }
    std::sort(expected.begin(), expected.end());
    CHECK(mirrored == expected);
  }
}

TEST_CASE("triplication word lift") {
  CHECK(triplication_word_lift(Word("01220"), 1) == Word("0001220"));
  CHECK(triplication_word_lift(Word("01"), 2) == Word("0111"));
  CHECK_THROWS_AS(triplication_word_lift(Word("01"), 3), IndexOutOfRange);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    TreePair pair(random_tree(n, rng), random_tree(n, rng));
    ParseWordSet words = parse_words(pair);
    for (int site = 1; site <= n; ++site) {
      TreePair tripled(triplicate_leaf(pair.t1, site), triplicate_leaf(pair.t2, site));
      for (const WordClass& c : words.classes) {
        Word lifted = triplication_word_lift(c.canonical, site);
        CHECK(parses(tripled.t1, lifted));
        CHECK(parses(tripled.t2, lifted));
      }
    }
  }
}

TEST_CASE("reduction laws on random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    TreePair pair(random_tree(n, rng), random_tree(n, rng));
    std::uint64_t base = count_parse_words(pair);
    int site = 1 + static_cast<int>(rng() % n);
    CHECK(count_parse_words(TreePair(attach_cherry(pair.t1, site),
                                     attach_cherry(pair.t2, site))) == 2 * base);
    CHECK(count_parse_words(TreePair(attach_cherry(pair.t1, site),
                                     duplicate_leaf(pair.t2, site))) == base);
  }
}

TEST_CASE("splice_solve basics") {
  auto cherry = splice_solve(TreePair(Tree::cherry(), Tree::cherry()));
  REQUIRE(cherry.has_value());
  CHECK(canonicalize(*cherry).canonical == Word("01"));

  auto combs = splice_solve(TreePair(left_comb_tree(4), right_comb_tree(4)));
  REQUIRE(combs.has_value());
  CHECK(canonicalize(*combs).canonical == Word("0112"));

  auto leaves = splice_solve(TreePair(Tree::leaf(), Tree::leaf()));
  REQUIRE(leaves.has_value());
}

TEST_CASE("splice_solve succeeds exactly when brute force does") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<Tree> trees = all_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        auto word = splice_solve(pair);
        REQUIRE(word.has_value());  // total ambiguity at desk scale
        CHECK(parses(pair.t1, *word));
        CHECK(parses(pair.t2, *word));
      }
    }
  }
}

TEST_CASE("splice_solve decomposition example") {
  // Two eight-leaf trees sharing a four-leaf branch system over leaves 2..5.
  Tree sub = deserialize("((**)(**))");
  Tree t1 = replace_subtree(left_comb_tree(5), left_comb_tree(5).leaf_vertex(2), sub);
  Tree t2 = replace_subtree(right_comb_tree(5), right_comb_tree(5).leaf_vertex(2), sub);
  TreePair pair(t1, t2);
  REQUIRE(t1.leaf_count() == 8);
  auto intervals = find_decompositions(pair);
  CHECK(std::find(intervals.begin(), intervals.end(), LeafInterval{2, 5}) != intervals.end());

  SpliceResult result = splice_solve_traced(pair);
  REQUIRE(result.word.has_value());
  CHECK(parses(pair.t1, *result.word));
  CHECK(parses(pair.t2, *result.word));
  CHECK(!result.trace.empty());
  CHECK(result.trace.front().kind == ReductionStep::Kind::decompose);
}

TEST_CASE("splice trace is replayable on path pairs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<Tree> paths = all_path_trees(n);
    TreePair pair(paths[rng() % paths.size()], paths[rng() % paths.size()]);
    SpliceResult result = splice_solve_traced(pair);
    REQUIRE(result.word.has_value());
    CHECK(parses(pair.t1, *result.word));
    CHECK(parses(pair.t2, *result.word));
    for (const ReductionStep& step : result.trace) {
      CHECK(!step.residues.empty());
    }
  }
}

TEST_CASE("01v1 exclusion and 01v2 restriction at small n") {
  for (int n = 3; n <= 7; ++n) {
    for (const Tree& t1 : all_path_trees(n)) {
      if (leaf_level(t1, 1) != 1) continue;
      for (const Tree& t2 : all_path_trees(n)) {
        if (leaf_level(t2, n) != 1) continue;
        ParseWordSet words = parse_words(TreePair(t1, t2));
        for (const WordClass& c : words.classes) {
          ClassFlags flags = class_predicates(c);
          CHECK(!flags.is_01v1);
          if (flags.is_01v2) {
            CHECK(leaf_level(t1, 2) == 2);
            CHECK(leaf_level(t2, n - 1) == 2);
          }
        }
      }
    }
  }
}
