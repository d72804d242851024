// Acceptance suite: one pass/fail line per criterion. Exit code 0 only when
// every requested criterion passes. `--criterion N` runs a single criterion;
// with no arguments the whole suite runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "parseword/closed_forms.hpp"
#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/reductions.hpp"
#include "parseword/tree.hpp"
#include "parseword/vector_model.hpp"
#include "parseword/verify.hpp"

using namespace parseword;

namespace {

struct Criterion {
  int id;
  const char* title;
  bool (*run)(std::string& detail);
};

// 1. Comb-comb uniqueness for n = 2..12, under 10 s.
bool criterion1(std::string& detail) {
  for (int n = 2; n <= 12; ++n) {
    ParseWordSet expected = comb_comb_words(n);
    ParseWordSet observed = parse_words(TreePair(left_comb_tree(n), right_comb_tree(n)));
    if (expected.classes != observed.classes) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "n=2..12 all singletons match";
  return true;
}

// 2. Crooked-crooked counts 2^(floor(n/2)-1) for n = 2..14, under 60 s.
bool criterion2(std::string& detail) {
  std::string counts;
  for (int n = 2; n <= 14; ++n) {
    std::uint64_t expected = crooked_crooked_count(n);
    std::uint64_t observed =
        count_parse_words(TreePair(left_crooked_tree(n), right_crooked_tree(n)));
    if (expected != observed) {
      detail = "mismatch at n=" + std::to_string(n);
      return false;
    }
    counts += (counts.empty() ? "" : ",") + std::to_string(observed);
  }
  detail = "counts " + counts;
  return true;
}

// 3. Comb-general 2^(l-1) for every tree with n = 2..9, under 5 min.
bool criterion3(std::string& detail) {
  std::uint64_t trees_checked = 0;
  for (int n = 2; n <= 9; ++n) {
    Tree comb = left_comb_tree(n);
    for (const Tree& t : all_trees(n)) {
      ++trees_checked;
      std::uint64_t expected = std::uint64_t{1} << (leaf_level(t, 1) - 1);
      if (count_parse_words(TreePair(t, comb)) != expected) {
        detail = "mismatch at n=" + std::to_string(n) + " t=" + serialize(t);
        return false;
      }
    }
  }
  detail = std::to_string(trees_checked) + " trees checked";
  return true;
}

// 4. Turn counts: formula vs brute force for m+n <= 13; base-count initial
// conditions and recurrence for m,k <= 12.
bool criterion4(std::string& detail) {
  std::uint64_t triples = 0;
  for (int m = 1; m <= 11; ++m) {
    for (int n = 2; m + n <= 13; ++n) {
      for (int k = 1; m + n - k >= 2; ++k) {
        ++triples;
        TreePair pair(left_turn_tree(m, n), right_turn_tree(k, m + n - k));
        if (turn_pair_count(m, n, k) != count_parse_words(pair)) {
          detail = "formula mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   " k=" + std::to_string(k);
          return false;
        }
      }
    }
  }
  const int expected_initial[6][3] = {{1, 1, 1}, {1, 2, 1}, {1, 3, 1},
                                      {2, 2, 4}, {2, 3, 5}, {3, 3, 3}};
  for (const auto& c : expected_initial) {
    if (turn_base_count(c[0], c[1]) != c[2]) {
      detail = "initial condition failed";
      return false;
    }
  }
  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= 12; ++k) {
      long long lhs = turn_base_count(m + 3, k) - 2 * turn_base_count(m + 2, k) -
                      turn_base_count(m + 1, k) + 2 * turn_base_count(m, k);
      if (lhs != 0) {
        detail = "recurrence failed at m=" + std::to_string(m) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  detail = std::to_string(triples) + " turn triples + recurrence grid";
  return true;
}

// 5. Alternating-word closed forms for m = 2..16.
bool criterion5(std::string& detail) {
  for (int m = 2; m <= 16; ++m) {
    std::uint64_t first = 0, second = 0;
    std::uint64_t total = std::uint64_t{1} << (m - 1);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      char prev = '0';
      for (int pos = 1; pos < m; ++pos) {
        char low = prev == '0' ? '1' : '0';
        char high = prev == '2' ? '1' : '2';
        prev = (bits >> (pos - 1)) & 1 ? high : low;
      }
      if (prev != '0') ++first;
      if (prev != '1') ++second;
    }
    if (alternating_counts(m) != std::pair<std::uint64_t, std::uint64_t>{first, second}) {
      detail = "mismatch at m=" + std::to_string(m);
      return false;
    }
  }
  detail = "m=2..16 matches enumeration";
  return true;
}

// 6. Bottom-bottom doubles and bottom-comb preserves the class count, over
// 500 random pairs per n in 3..10 and every site.
bool criterion6(std::string& detail) {
  std::uint64_t checks = 0;
  for (int n = 3; n <= 10; ++n) {
    std::mt19937_64 rng(0x5EEDBA5Eull + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 500; ++trial) {
      TreePair base(random_tree(n, rng), random_tree(n, rng));
      std::uint64_t count = count_parse_words(base);
      for (int site = 1; site <= n; ++site) {
        ++checks;
        if (count_parse_words(TreePair(attach_cherry(base.t1, site),
                                       attach_cherry(base.t2, site))) != 2 * count) {
          detail = "doubling failed n=" + std::to_string(n) + " site=" + std::to_string(site);
          return false;
        }
        if (count_parse_words(TreePair(attach_cherry(base.t1, site),
                                       duplicate_leaf(base.t2, site))) != count) {
          detail = "preservation failed n=" + std::to_string(n) +
                   " site=" + std::to_string(site);
          return false;
        }
      }
    }
  }
  detail = std::to_string(checks) + " site extensions exact";
  return true;
}

// 7. Triplication lifts over 500 random pairs per n in 3..8, every site and
// every common parse word.
bool criterion7(std::string& detail) {
  std::uint64_t lifts = 0;
  for (int n = 3; n <= 8; ++n) {
    std::mt19937_64 rng(0x7817ACA7Eull + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 500; ++trial) {
      TreePair base(random_tree(n, rng), random_tree(n, rng));
      ParseWordSet words = parse_words(base);
      for (int site = 1; site <= n; ++site) {
        TreePair tripled(triplicate_leaf(base.t1, site), triplicate_leaf(base.t2, site));
        for (const WordClass& c : words.classes) {
          ++lifts;
          Word lifted = triplication_word_lift(c.canonical, site);
          if (!parses(tripled.t1, lifted) || !parses(tripled.t2, lifted)) {
            detail = "lift failed n=" + std::to_string(n) + " site=" + std::to_string(site);
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(lifts) + " lifted words verified";
  return true;
}

// 8. Vector-model bijection for all pairs with n <= 6, under 2 min.
bool criterion8(std::string& detail) {
  std::uint64_t pairs_checked = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Tree> trees = all_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++pairs_checked;
        ParsePlan plan1(pair.t1), plan2(pair.t2);
        std::string scratch, ascii;
        std::uint64_t tuples = 0;
        bool tau_ok = true;
        for_each_nonzero_tuple(pair.t1, pair.t2, [&](std::span<const SignedVector> vs) {
          ++tuples;
          ascii.clear();
          for (SignedVector v : vs) ascii.push_back(tau(v));
          if (!plan1.parses(ascii, scratch) || !plan2.parses(ascii, scratch)) tau_ok = false;
          return true;
        });
        std::uint64_t expected =
            n == 1 ? 3 : 6 * count_parse_words(pair);
        if (tuples != expected || !tau_ok) {
          detail = "bijection failed for " + serialize(pair.t1) + " / " + serialize(pair.t2);
          return false;
        }
      }
    }
  }
  detail = std::to_string(pairs_checked) + " pairs, tuples = 6 x classes, tau verified";
  return true;
}

// 9. Root-parity invariant over all trees n <= 8 and all their words.
bool criterion9(std::string& detail) {
  std::uint64_t words_checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Tree& t : all_trees(n)) {
      WordStream stream(t);
      while (stream.next()) {
        ++words_checked;
        auto expected = root_letter_by_parity(stream.word());
        if (!expected || *expected != stream.labeling().root_label()) {
          detail = "parity mismatch on " + serialize(t) + " word " + stream.word().ascii();
          return false;
        }
      }
    }
  }
  detail = std::to_string(words_checked) + " words conform";
  return true;
}

// 10. Total ambiguity at desk scale: path pairs n <= 12 and binary pairs
// n <= 8 all have a nonempty set, and splice_solve returns a verified word.
bool criterion10(std::string& detail) {
  std::uint64_t solved = 0;
  for (int n = 2; n <= 12; ++n) {
    std::vector<Tree> trees = all_path_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        auto word = splice_solve(pair);
        if (!word || !parses(pair.t1, *word) || !parses(pair.t2, *word)) {
          detail = "path pair unsolved: " + serialize(pair.t1) + " / " + serialize(pair.t2);
          return false;
        }
        ++solved;
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    std::vector<Tree> trees = all_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        auto word = splice_solve(pair);
        if (!word || !parses(pair.t1, *word) || !parses(pair.t2, *word)) {
          detail = "binary pair unsolved: " + serialize(pair.t1) + " / " + serialize(pair.t2);
          return false;
        }
        ++solved;
      }
    }
  }
  detail = std::to_string(solved) + " pairs solved and verified";
  return true;
}

// 11. 01v1 theorem: no is_01v1 class for configured path pairs n <= 10.
bool criterion11(std::string& detail) {
  std::uint64_t pairs_checked = 0;
  for (int n = 3; n <= 10; ++n) {
    std::vector<Tree> first, second;
    for (const Tree& t : all_path_trees(n)) {
      if (leaf_level(t, 1) == 1) first.push_back(t);
      if (leaf_level(t, n) == 1) second.push_back(t);
    }
    for (const Tree& t1 : first) {
      for (const Tree& t2 : second) {
        ++pairs_checked;
        ParseWordSet words = parse_words(TreePair(t1, t2));
        for (const WordClass& c : words.classes) {
          if (class_predicates(c).is_01v1) {
            detail = "01v1 class " + c.canonical.ascii() + " on " + serialize(t1) + " / " +
                     serialize(t2);
            return false;
          }
        }
      }
    }
  }
  detail = std::to_string(pairs_checked) + " configured pairs, zero 01v1 classes";
  return true;
}

// 12. u00v conjecture replication: every path pair n <= 10 parses a word with
// adjacent equal letters (n <= 12 as an opt-in long campaign via
// PARSEWORD_ACCEPT_LONG=1).
bool criterion12(std::string& detail) {
  const char* long_run = std::getenv("PARSEWORD_ACCEPT_LONG");
  int max_n = long_run && std::strcmp(long_run, "1") == 0 ? 12 : 10;
  auto has_adjacent_equal = [](const Word& w) {
    for (int i = 0; i + 1 < w.size(); ++i) {
      if (w.at(i) == w.at(i + 1)) return true;
    }
    return false;
  };
  std::uint64_t pairs_checked = 0;
  for (int n = 4; n <= max_n; ++n) {
    std::vector<Tree> trees = all_path_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++pairs_checked;
        if (!first_common_word_if(pair, has_adjacent_equal)) {
          detail = "no u00v witness: " + serialize(pair.t1) + " / " + serialize(pair.t2);
          return false;
        }
      }
    }
  }
  detail = std::to_string(pairs_checked) + " path pairs witnessed (n<=" +
           std::to_string(max_n) + ")";
  return true;
}

// 13. Bit-exactness: verify reports identical across runs and worker counts.
bool criterion13(std::string& detail) {
  for (const char* id : {"comb-comb", "u00v", "bottom-bottom"}) {
    CampaignOptions serial;
    serial.max_n = 7;
    serial.random_pairs = 50;
    serial.workers = 1;
    CampaignOptions parallel = serial;
    parallel.workers = 5;
    std::string a = run_claim(id, serial).serialize_text();
    std::string b = run_claim(id, parallel).serialize_text();
    std::string c = run_claim(id, serial).serialize_text();
    if (a != b || a != c) {
      detail = std::string("report divergence for claim ") + id;
      return false;
    }
  }
  detail = "reports byte-identical across runs and worker counts";
  return true;
}

const Criterion kCriteria[] = {
    {1, "comb-comb uniqueness n=2..12", criterion1},
    {2, "crooked-crooked counts n=2..14", criterion2},
    {3, "comb-general over all trees n=2..9", criterion3},
    {4, "turn counts and base recurrence", criterion4},
    {5, "alternating-word closed forms m=2..16", criterion5},
    {6, "bottom-bottom doubling / bottom-comb preservation", criterion6},
    {7, "triplication word lifts", criterion7},
    {8, "vector-model bijection n<=6", criterion8},
    {9, "root-parity invariant n<=8", criterion9},
    {10, "total ambiguity: path n<=12, binary n<=8, splice-solved", criterion10},
    {11, "01v1 exclusion n<=10", criterion11},
    {12, "u00v replication n<=10 (12 with PARSEWORD_ACCEPT_LONG=1)", criterion12},
    {13, "bit-exact verify reports", criterion13},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
    }
  }
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = c.run(detail);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2d] %s  %s (%s) [%.1fs]\n", c.id, ok ? "PASS" : "FAIL", c.title,
                detail.c_str(), seconds);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
