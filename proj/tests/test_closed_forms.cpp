#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "parseword/closed_forms.hpp"
#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/tree.hpp"

using namespace parseword;

TEST_CASE("mod3") {
  CHECK(mod3(-3) == 0);
  CHECK(mod3(1 - 7) == 0);
  CHECK(mod3(2 - 4) == 1);
  CHECK(mod3(5) == 2);
  CHECK(mod3(0) == 0);
}

TEST_CASE("word_power truncation") {
  Word w("012");
  CHECK(word_power(w, 8, 6).ascii() == "0120");
  CHECK(word_power(w, 2, 1).ascii() == "012012");
  CHECK(word_power(w, 0, 1).ascii().empty());
  CHECK(word_power(w, 4, 6).ascii() == "01");
  CHECK(word_power(Word("01"), 3, 2).ascii() == "010");
  CHECK_THROWS_AS(word_power(w, 1, 2), BadParams);  // 3/2 letters is not an integer
  CHECK_THROWS_AS(word_power(w, 7, 6), BadParams);  // 3.5 letters
  CHECK(word_reverse(Word("10")).ascii() == "01");
}

TEST_CASE("comb-comb closed form") {
  CHECK(comb_comb_words(4).classes == std::vector<WordClass>{WordClass{Word("0112")}});
  CHECK(comb_comb_words(5).classes == std::vector<WordClass>{WordClass{Word("01110")}});
  CHECK(comb_comb_words(2).classes == std::vector<WordClass>{WordClass{Word("01")}});
  CHECK(comb_comb_words_literal(2).front() == Word("02"));
  CHECK_THROWS_AS(comb_comb_words(1), BadParams);

  for (int n = 2; n <= 12; ++n) {
    CHECK(comb_comb_words(n) ==
          parse_words(TreePair(left_comb_tree(n), right_comb_tree(n))));
  }
}

TEST_CASE("turn-turn closed form") {
  // The literal instantiation at (m=1, n=3) and its brute-force confirmation.
  std::vector<Word> literal = turn_turn_words_literal(1, 3);
  CHECK(literal == std::vector<Word>{Word("0020"), Word("0200")});
  CHECK(turn_turn_words(1, 3).classes ==
        std::vector<WordClass>{WordClass{Word("0010")}, WordClass{Word("0100")}});

  std::vector<Word> literal24 = turn_turn_words_literal(2, 4);
  CHECK(literal24 == std::vector<Word>{Word("021200"), Word("001000")});

  for (int m = 1; m <= 5; ++m) {
    for (int n = 3; m + n <= 12; ++n) {
      ParseWordSet closed = turn_turn_words(m, n);
      CHECK(closed.classes.size() == 2);
      CHECK(closed ==
            parse_words(TreePair(left_turn_tree(m, n), right_turn_tree(1, m + n - 1))));
    }
  }
}

TEST_CASE("comb-crooked closed form") {
  CHECK(comb_crooked_words_literal(2).front() == Word("20"));
  CHECK(comb_crooked_words(2).classes == std::vector<WordClass>{WordClass{Word("01")}});
  CHECK(comb_crooked_words(4).classes == std::vector<WordClass>{WordClass{Word("0100")}});
  CHECK(comb_crooked_words(7).classes.size() == 1);

  for (int n = 2; n <= 12; ++n) {
    CHECK(comb_crooked_words(n) ==
          parse_words(TreePair(left_comb_tree(n), right_crooked_tree(n))));
  }
}

TEST_CASE("comb-crooked2 closed form") {
  std::vector<Word> literal4 = comb_crooked2_words_literal(4);
  CHECK(literal4 == std::vector<Word>{Word("1011"), Word("1012")});
  CHECK(comb_crooked2_words(4).classes ==
        std::vector<WordClass>{WordClass{Word("0100")}, WordClass{Word("0102")}});
  CHECK(comb_crooked2_words(3).classes.size() == 2);

  for (int n = 3; n <= 12; ++n) {
    ParseWordSet closed = comb_crooked2_words(n);
    CHECK(closed.classes.size() == 2);
    CHECK(closed == parse_words(TreePair(left_comb_tree(n), left_crooked_tree(n))));
  }
}

TEST_CASE("crooked-crooked count and membership") {
  CHECK(crooked_crooked_count(2) == 1);
  CHECK(crooked_crooked_count(6) == 4);
  CHECK(crooked_crooked_count(7) == 4);
  for (int n = 2; n <= 12; ++n) {
    CHECK(crooked_crooked_count(n) ==
          count_parse_words(TreePair(left_crooked_tree(n), right_crooked_tree(n))));
  }

  CHECK(crooked_crooked_membership(Word("010")));
  CHECK(!crooked_crooked_membership(Word("000")));
  // 0110 fails the middle-letters-differ requirement (w2 = w3); the actual
  // 4-letter members have the shape x a c x with a != c and x in {a, c}.
  CHECK(!crooked_crooked_membership(Word("0110")));
  CHECK(crooked_crooked_membership(Word("0010")));
  CHECK(crooked_crooked_membership(Word("0120")) == false);
  CHECK(crooked_crooked_membership(Word("1011")));

  // Characterization against brute force over the full word space.
  for (int n = 2; n <= 9; ++n) {
    Tree t1 = left_crooked_tree(n);
    Tree t2 = right_crooked_tree(n);
    std::string ascii(static_cast<std::size_t>(n), '0');
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        ascii[static_cast<std::size_t>(i)] = static_cast<char>('0' + c % 3);
        c /= 3;
      }
      Word w(ascii);
      bool common = parses(t1, w) && parses(t2, w);
      CHECK(crooked_crooked_membership(w) == common);
    }
  }
}

TEST_CASE("comb-general count") {
  CHECK(comb_general_count(right_comb_tree(6)) == 1);
  CHECK(comb_general_count(left_comb_tree(5)) == 8);
  CHECK(comb_general_count(left_crooked_tree(6)) == 2);
  CHECK_THROWS_AS(comb_general_count(Tree::leaf()), BadParams);

  for (int n = 2; n <= 8; ++n) {
    Tree comb = left_comb_tree(n);
    for (const Tree& t : all_trees(n)) {
      CHECK(comb_general_count(t) == count_parse_words(TreePair(t, comb)));
    }
  }
}

TEST_CASE("turn base count matches its initial conditions and the recurrence") {
  CHECK(turn_base_count(1, 1) == 1);
  CHECK(turn_base_count(1, 2) == 1);
  CHECK(turn_base_count(1, 3) == 1);
  CHECK(turn_base_count(2, 2) == 4);
  CHECK(turn_base_count(2, 3) == 5);
  CHECK(turn_base_count(3, 3) == 3);
  CHECK_THROWS_AS(turn_base_count(0, 1), BadParams);

  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= 12; ++k) {
      CHECK(turn_base_count(m, k) == turn_base_count(k, m));
      CHECK(turn_base_count(m + 3, k) - 2 * turn_base_count(m + 2, k) -
                turn_base_count(m + 1, k) + 2 * turn_base_count(m, k) ==
            0);
    }
    CHECK(turn_base_count(1, m) == 1);
  }

  // Definition check by brute force: a(m,k) counts the base turn pair.
  for (int m = 1; m <= 4; ++m) {
    for (int k = m; m + k + 1 <= 11; ++k) {
      CHECK(turn_base_count(m, k) ==
            static_cast<long long>(count_parse_words(
                TreePair(left_turn_tree(m, k + 1), right_turn_tree(k, m + 1)))));
    }
  }

  TurnCountTable table;
  CHECK(table.at(2, 3) == 5);
  CHECK(table.at(3, 2) == 5);
}

TEST_CASE("turn pair count regions") {
  CHECK(turn_pair_count(3, 3, 3) == 1);
  CHECK(turn_pair_count(2, 4, 2) == 8);
  CHECK(turn_pair_count(2, 4, 3) == 5);
  CHECK_THROWS_AS(turn_pair_count(0, 3, 1), BadParams);
  CHECK_THROWS_AS(turn_pair_count(1, 2, 3), BadParams);  // right tree ill-formed

  for (int m = 1; m <= 4; ++m) {
    for (int n = 2; m + n <= 11; ++n) {
      for (int k = 1; m + n - k >= 2; ++k) {
        TreePair pair(left_turn_tree(m, n), right_turn_tree(k, m + n - k));
        CHECK(turn_pair_count(m, n, k) == count_parse_words(pair));
      }
    }
  }
}

TEST_CASE("alternating counts") {
  CHECK(alternating_counts(2) == std::pair<std::uint64_t, std::uint64_t>{2, 1});
  CHECK(alternating_counts(3) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK(alternating_counts(4) == std::pair<std::uint64_t, std::uint64_t>{6, 5});
  CHECK_THROWS_AS(alternating_counts(1), BadParams);

  // Direct enumeration oracle.
  for (int m = 2; m <= 14; ++m) {
    std::uint64_t first = 0, second = 0;
    std::uint64_t total = std::uint64_t{1} << (m - 1);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      char prev = '0';
      char last = '0';
      for (int pos = 1; pos < m; ++pos) {
        // Two alternating choices per step, ordered by letter.
        char low = prev == '0' ? '1' : '0';
        char high = prev == '2' ? '1' : '2';
        last = (bits >> (pos - 1)) & 1 ? high : low;
        prev = last;
      }
      if (last != '0') ++first;
      if (last != '1') ++second;
    }
    CHECK(alternating_counts(m) == std::pair<std::uint64_t, std::uint64_t>{first, second});
  }
}
