#include "parseword/grammar.hpp"

#include <algorithm>

namespace parseword {

namespace {

constexpr int kAsciiLetterSum = '0' + '1' + '2';

inline char third_letter(char a, char b) {
  return static_cast<char>(kAsciiLetterSum - a - b);
}

}  // namespace

Word::Word(std::string_view ascii) : letters_(ascii) {
  for (char c : letters_) {
    if (c < '0' || c > '2') throw BadParams("word letters must be '0', '1' or '2'");
  }
}

int Word::count(char letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

namespace detail {

Word word_from_ascii_unchecked(std::string raw) { return Word(std::move(raw), 0); }

}  // namespace detail

bool labeling_consistent(const Tree& t, const Labeling& lab) {
  if (lab.labels.size() != t.vertex_count()) return false;
  for (char c : lab.labels) {
    if (c < '0' || c > '2') return false;
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) continue;
    char a = lab.at(t.left_child(v));
    char b = lab.at(t.right_child(v));
    if (a == b || lab.at(v) != third_letter(a, b)) return false;
  }
  return true;
}

Word leaf_word(const Tree& t, const Labeling& lab) {
  std::string out;
  out.reserve(static_cast<std::size_t>(t.leaf_count()));
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) out.push_back(lab.at(v));
  }
  return detail::word_from_ascii_unchecked(std::move(out));
}

ParsePlan::ParsePlan(const Tree& t) : tree_(t) {
  std::size_t count = t.vertex_count();
  right_child_.assign(count, 0);
  leaf_rank_of_.assign(count, -1);
  int rank = 0;
  for (Vertex v = 0; v < count; ++v) {
    if (t.is_leaf(v)) {
      leaf_rank_of_[v] = rank++;
    } else {
      right_child_[v] = t.right_child(v);
    }
  }
}

bool ParsePlan::parses(std::string_view ascii) const {
  std::string scratch;
  return parses(ascii, scratch);
}

bool ParsePlan::parses(std::string_view ascii, std::string& scratch) const {
  std::size_t count = right_child_.size();
  if (ascii.size() != static_cast<std::size_t>(leaf_count())) {
    throw LengthMismatch("word length differs from leaf count");
  }
  scratch.resize(count);
  // Children follow their parent in preorder, so a reverse sweep sees both
  // child labels before combining them.
  for (std::size_t v = count; v-- > 0;) {
    if (leaf_rank_of_[v] >= 0) {
      scratch[v] = ascii[static_cast<std::size_t>(leaf_rank_of_[v])];
    } else {
      char a = scratch[v + 1];
      char b = scratch[right_child_[v]];
      if (a == b) return false;
      scratch[v] = third_letter(a, b);
    }
  }
  return true;
}

std::optional<Labeling> ParsePlan::run(std::string_view ascii) const {
  std::string scratch;
  if (!parses(ascii, scratch)) return std::nullopt;
  return Labeling{std::move(scratch)};
}

std::optional<Labeling> parse(const Tree& t, const Word& w) {
  return ParsePlan(t).run(w.ascii());
}

bool parses(const Tree& t, const Word& w) {
  return ParsePlan(t).parses(w.ascii());
}

std::optional<char> root_letter_by_parity(const Word& w) {
  if (w.size() < 1) throw BadParams("parity rule needs a nonempty word");
  int parity = w.size() & 1;
  char result = 0;
  int matches = 0;
  for (char letter : {'0', '1', '2'}) {
    if ((w.count(letter) & 1) == parity) {
      result = letter;
      ++matches;
    }
  }
  // The count parities sum to |w| mod 2, so either exactly one count matches
  // the word-length parity or all three do.
  if (matches != 1) return std::nullopt;
  return result;
}

WordStream::WordStream(const Tree& t, bool fix_root_letter_zero) : plan_(t) {
  std::size_t count = t.vertex_count();
  internal_rank_of_.assign(count, -1);
  for (Vertex v = 0; v < count; ++v) {
    if (!plan_.is_leaf(v)) internal_rank_of_[v] = internal_count_++;
  }
  if (internal_count_ > 62) throw RangeTooLarge("word enumeration beyond 63 leaves");
  bits_limit_ = std::uint64_t{1} << internal_count_;
  if (fix_root_letter_zero) root_letter_limit_ = 1;
  labeling_.labels.resize(count);
  word_ = detail::word_from_ascii_unchecked(std::string(static_cast<std::size_t>(plan_.leaf_count()), '0'));
}

std::uint64_t WordStream::total() const {
  return static_cast<std::uint64_t>(root_letter_limit_) * bits_limit_;
}

bool WordStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (++bits_ >= bits_limit_) {
    bits_ = 0;
    if (++root_letter_ >= root_letter_limit_) {
      done_ = true;
      return false;
    }
  }
  fill();
  return true;
}

void WordStream::fill() {
  std::string& labels = labeling_.labels;
  std::string& word = word_.letters_;
  labels[0] = static_cast<char>('0' + root_letter_);
  for (Vertex v = 0; v < plan_.vertex_count(); ++v) {
    int rank = plan_.leaf_rank(v);
    if (rank >= 0) {
      word[static_cast<std::size_t>(rank)] = labels[v];
      continue;
    }
    char p = labels[v];
    char lo = p == '0' ? '1' : '0';
    char hi = p == '2' ? '1' : '2';
    bool swapped = (bits_ >> (internal_count_ - 1 - internal_rank_of_[v])) & 1;
    labels[v + 1] = swapped ? hi : lo;
    labels[plan_.right_child(v)] = swapped ? lo : hi;
  }
}

WordClass canonicalize(const Word& w) {
  // First-occurrence relabeling is the lexicographically least permuted image:
  // the earliest position where images could differ gets the smallest unused
  // letter.
  char image[3] = {0, 0, 0};
  char next = '0';
  std::string out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (char c : w.ascii()) {
    char& slot = image[c - '0'];
    if (slot == 0) slot = next++;
    out.push_back(slot);
  }
  return WordClass{detail::word_from_ascii_unchecked(std::move(out))};
}

ClassFlags class_predicates(const WordClass& c) {
  const Word& w = c.canonical;
  int n = w.size();
  if (n < 2) throw TooShort("class predicates need length >= 2");
  ClassFlags flags;
  flags.has_00v = w.at(0) == w.at(1);
  flags.has_v00 = w.at(n - 2) == w.at(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    if (w.at(i) == w.at(i + 1)) {
      flags.has_u00v = true;
      break;
    }
  }
  if (n >= 3) {
    flags.is_01v1 = w.at(0) != w.at(1) && w.at(n - 1) == w.at(1);
    flags.is_01v2 = w.at(0) != w.at(1) && w.at(n - 1) != w.at(0) && w.at(n - 1) != w.at(1);
  }
  if (n >= 4) {
    flags.is_01v00 = w.at(0) != w.at(1) && w.at(n - 2) == w.at(n - 1) && w.at(n - 1) == w.at(0);
  }
  return flags;
}

}  // namespace parseword
