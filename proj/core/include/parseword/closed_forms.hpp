#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/tree.hpp"

namespace parseword {

// Closed-form parse-word sets and counts for the comb/turn/crooked families.
// Every set-valued function returns canonicalized classes; the literal
// pre-canonical instantiations are available via the *_literal variants for
// inspection.

/// Smallest nonnegative integer congruent to x modulo 3.
int mod3(long long x);

/// w^(num/den): repeated copies of w truncated at |w| * num / den letters.
/// Throws BadParams when |w| * num is not divisible by den (or den <= 0,
/// num < 0).
Word word_power(const Word& w, long long num, long long den);

/// Left-right reversal.
Word word_reverse(const Word& w);

/// ParseWords(LeftComb(n), RightComb(n)): the singleton {0 1^(n-2) 2} for even
/// n, {0 1^(n-2) 0} for odd n. n >= 2.
ParseWordSet comb_comb_words(int n);
std::vector<Word> comb_comb_words_literal(int n);

/// ParseWords(LeftTurn(m, n), RightTurn(1, m+n-1)): the two-element set
/// {0 0 1^(n-3) 2 0^m, 0 2 1^(n-3) 0 0^m} for odd n >= 3 and
/// {0 2 1^(n-3) 2 0^m, 0 0 1^(n-3) 0 0^m} for even n >= 4. m >= 1.
ParseWordSet turn_turn_words(int m, int n);
std::vector<Word> turn_turn_words_literal(int m, int n);

/// ParseWords(LeftComb(n), RightCrooked(n)): a singleton built from reversed
/// and forward truncated powers of 012 with a mod-3 prefix letter. n >= 2.
ParseWordSet comb_crooked_words(int n);
std::vector<Word> comb_crooked_words_literal(int n);

/// ParseWords(LeftComb(n), LeftCrooked(n)): the two-element variant of the
/// comb-crooked form (suffix letter split). n >= 3.
ParseWordSet comb_crooked2_words(int n);
std::vector<Word> comb_crooked2_words_literal(int n);

/// |ParseWords(LeftCrooked(n), RightCrooked(n))| = 2^(floor(n/2) - 1). n >= 2.
std::uint64_t crooked_crooked_count(int n);

/// Membership characterization of the crooked-crooked common parse words:
/// odd n:  w_i = w_(n+1-i) != w_((n+1)/2) for 1 <= i <= (n-1)/2;
/// even n: the two middle letters differ and the mirrored letters all avoid
/// the third letter distinct from both middles.
bool crooked_crooked_membership(const Word& w);

/// |ParseWords(T, LeftComb(n))| = 2^(l-1) where l is the level of leaf 1 in
/// T. n >= 2.
std::uint64_t comb_general_count(const Tree& t);

/// The base turn-pair count a(m, k) = |ParseWords(LeftTurn(m, k+1),
/// RightTurn(k, m+1))|, evaluated by the exact rational 3x3 matrix-product
/// formula. Symmetric in (m, k); satisfies
/// a(m+3,k) - 2a(m+2,k) - a(m+1,k) + 2a(m,k) = 0.
long long turn_base_count(int m, int k);

/// Memoized view of turn_base_count. Not thread-safe; confine to one thread
/// or guard externally while filling.
class TurnCountTable {
 public:
  long long at(int m, int k);

 private:
  std::map<std::pair<int, int>, long long> memo_;
};

/// |ParseWords(LeftTurn(m, n), RightTurn(k, m+n-k))|:
///   1                     for max(2, k-m+2) <= n <= k,
///   turn_base_count(m,k)  for n = k+1,
///   2*turn_base_count(m,k) for n >= k+2.
/// Throws BadParams when either tree is ill-formed.
std::uint64_t turn_pair_count(int m, int n, int k);

/// Counts of length-m alternating words (no two consecutive letters equal) of
/// the forms 0 v2..vm with vm in {1,2} (first) and vm in {0,2} (second):
/// (2^m + 2(-1)^m)/3 and (2^m - (-1)^m)/3. m >= 2.
std::pair<std::uint64_t, std::uint64_t> alternating_counts(int m);

}  // namespace parseword
