#include "parseword/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>

namespace parseword {

namespace {

ParseWordSet canonical_set(const std::vector<Word>& words) {
  std::set<WordClass> classes;
  for (const Word& w : words) classes.insert(canonicalize(w));
  ParseWordSet out;
  out.classes.assign(classes.begin(), classes.end());
  out.raw_count = 6 * static_cast<std::uint64_t>(out.classes.size());
  return out;
}

std::string repeated(char c, int count) {
  return std::string(static_cast<std::size_t>(count), c);
}

Word word012() { return detail::word_from_ascii_unchecked("012"); }

}  // namespace

int mod3(long long x) {
  return static_cast<int>(((x % 3) + 3) % 3);
}

Word word_power(const Word& w, long long num, long long den) {
  if (den <= 0 || num < 0) throw BadParams("word_power needs num >= 0, den > 0");
  long long m = w.size();
  if (m == 0) {
    if (num == 0) return Word();
    throw BadParams("word_power of the empty word");
  }
  if ((m * num) % den != 0) throw BadParams("word_power length m*num/den is not an integer");
  long long len = m * num / den;
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (long long i = 0; i < len; ++i) {
    out.push_back(w.at(static_cast<int>(i % m)));
  }
  return detail::word_from_ascii_unchecked(std::move(out));
}

Word word_reverse(const Word& w) {
  std::string out(w.ascii());
  std::reverse(out.begin(), out.end());
  return detail::word_from_ascii_unchecked(std::move(out));
}

std::vector<Word> comb_comb_words_literal(int n) {
  if (n < 2) throw BadParams("comb_comb_words needs n >= 2");
  char last = n % 2 == 0 ? '2' : '0';
  std::string w = "0" + repeated('1', n - 2) + std::string(1, last);
  return {detail::word_from_ascii_unchecked(std::move(w))};
}

ParseWordSet comb_comb_words(int n) { return canonical_set(comb_comb_words_literal(n)); }

std::vector<Word> turn_turn_words_literal(int m, int n) {
  if (m < 1 || n < 3) throw BadParams("turn_turn_words needs m >= 1, n >= 3");
  std::string mid = repeated('1', n - 3);
  std::string tail = repeated('0', m);
  std::string first, second;
  if (n % 2 == 1) {
    first = "00" + mid + "2" + tail;
    second = "02" + mid + "0" + tail;
  } else {
    first = "02" + mid + "2" + tail;
    second = "00" + mid + "0" + tail;
  }
  return {detail::word_from_ascii_unchecked(std::move(first)),
          detail::word_from_ascii_unchecked(std::move(second))};
}

ParseWordSet turn_turn_words(int m, int n) {
  return canonical_set(turn_turn_words_literal(m, n));
}

std::vector<Word> comb_crooked_words_literal(int n) {
  if (n < 2) throw BadParams("comb_crooked_words needs n >= 2");
  Word base = word012();
  std::string prefix(1, static_cast<char>('0' + mod3(1 - n)));
  Word rev_part, fwd_part;
  if (n % 2 == 0) {
    rev_part = word_reverse(word_power(base, n, 6));
    fwd_part = word_power(base, n - 2, 6);
  } else {
    rev_part = word_reverse(word_power(base, n - 3, 6));
    fwd_part = word_power(base, n + 1, 6);
  }
  return {detail::word_from_ascii_unchecked(prefix + rev_part.ascii() + fwd_part.ascii())};
}

ParseWordSet comb_crooked_words(int n) {
  return canonical_set(comb_crooked_words_literal(n));
}

std::vector<Word> comb_crooked2_words_literal(int n) {
  if (n < 3) throw BadParams("comb_crooked2_words needs n >= 3");
  Word base = word012();
  std::string prefix(1, static_cast<char>('0' + mod3(2 - n)));
  char suffix_a = static_cast<char>('0' + mod3(2 - n));
  char suffix_b = static_cast<char>('0' + mod3(-n));
  Word rev_part, fwd_part;
  if (n % 2 == 1) {
    rev_part = word_reverse(word_power(base, n - 1, 6));
    fwd_part = word_power(base, n - 3, 6);
  } else {
    rev_part = word_reverse(word_power(base, n - 4, 6));
    fwd_part = word_power(base, n, 6);
  }
  std::string body = prefix + rev_part.ascii() + fwd_part.ascii();
  return {detail::word_from_ascii_unchecked(body + std::string(1, suffix_a)),
          detail::word_from_ascii_unchecked(body + std::string(1, suffix_b))};
}

ParseWordSet comb_crooked2_words(int n) {
  return canonical_set(comb_crooked2_words_literal(n));
}

std::uint64_t crooked_crooked_count(int n) {
  if (n < 2) throw BadParams("crooked_crooked_count needs n >= 2");
  return std::uint64_t{1} << (n / 2 - 1);
}

bool crooked_crooked_membership(const Word& w) {
  int n = w.size();
  if (n < 2) return false;
  if (n % 2 == 1) {
    char center = w.at((n - 1) / 2);
    for (int i = 0; i < (n - 1) / 2; ++i) {
      if (w.at(i) != w.at(n - 1 - i) || w.at(i) == center) return false;
    }
    return true;
  }
  char a = w.at(n / 2 - 1);
  char c = w.at(n / 2);
  if (a == c) return false;
  // b is the erased center of the odd-length ancestor word: the letter
  // distinct from both middle letters.
  char b = static_cast<char>('0' + '1' + '2' - a - c);
  for (int i = 0; i < n / 2 - 1; ++i) {
    if (w.at(i) != w.at(n - 1 - i) || w.at(i) == b) return false;
  }
  return true;
}

std::uint64_t comb_general_count(const Tree& t) {
  if (t.leaf_count() < 2) throw BadParams("comb_general_count needs n >= 2");
  int level = leaf_level(t, 1);
  return std::uint64_t{1} << (level - 1);
}

namespace {

// Exact rational with long long components; intermediates use __int128.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num = clamp_cast(n);
    r.den = clamp_cast(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static long long clamp_cast(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw RangeTooLarge("rational overflow");
    return static_cast<long long>(v);
  }

  Rational operator+(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                static_cast<__int128>(den) * o.den);
  }
  Rational operator*(const Rational& o) const {
    return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
  }
};

}  // namespace

long long turn_base_count(int m, int k) {
  if (m < 1 || k < 1) throw BadParams("turn_base_count needs m, k >= 1");
  if (m > 55 || k > 55) throw RangeTooLarge("turn_base_count parameters too large for exact arithmetic");
  auto side = [](int x) {
    long long sign = x % 2 == 0 ? 1 : -1;
    return std::array<Rational, 3>{
        Rational::make(static_cast<__int128>(2) << x, 3),  // 2/3 * 2^x
        Rational::make(1, 1),
        Rational::make(5 * sign, 3),  // 5/3 * (-1)^x
    };
  };
  static const Rational kMatrix[3][3] = {
      {Rational::make(1, 2), Rational::make(1, 1), Rational::make(1, 1)},
      {Rational::make(1, 1), Rational::make(1, 1), Rational::make(-1, 1)},
      {Rational::make(1, 1), Rational::make(-1, 1), Rational::make(1, 5)},
  };
  auto row = side(m);
  auto col = side(k);
  Rational acc = Rational::make(0, 1);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      acc = acc + row[static_cast<std::size_t>(i)] * kMatrix[i][j] * col[static_cast<std::size_t>(j)];
    }
  }
  acc = acc * Rational::make(1, 4);
  if (acc.den != 1) throw std::logic_error("turn_base_count produced a non-integer");
  return acc.num;
}

long long TurnCountTable::at(int m, int k) {
  auto key = std::minmax(m, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  long long value = turn_base_count(m, k);
  memo_.emplace(key, value);
  return value;
}

std::uint64_t turn_pair_count(int m, int n, int k) {
  if (m < 1 || k < 1 || n < 2) throw BadParams("turn_pair_count needs m, k >= 1 and n >= 2");
  if (m + n - k < 2) throw BadParams("turn_pair_count: right turn tree is ill-formed");
  if (n <= k) return 1;
  long long base = turn_base_count(m, k);
  return static_cast<std::uint64_t>(n == k + 1 ? base : 2 * base);
}

std::pair<std::uint64_t, std::uint64_t> alternating_counts(int m) {
  if (m < 2) throw BadParams("alternating_counts needs m >= 2");
  if (m > 62) throw RangeTooLarge("alternating_counts parameter too large");
  long long pow2 = 1LL << m;
  long long sign = m % 2 == 0 ? 1 : -1;
  long long a = (pow2 + 2 * sign) / 3;
  long long b = (pow2 - sign) / 3;
  return {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)};
}

}  // namespace parseword
