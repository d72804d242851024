#include "parseword/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "parseword/closed_forms.hpp"
#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/reductions.hpp"
#include "parseword/tree.hpp"
#include "parseword/vector_model.hpp"

namespace parseword {

bool VerificationReport::pass() const { return failure_count() == 0; }

std::uint64_t VerificationReport::failure_count() const {
  std::uint64_t count = 0;
  for (const CheckPoint& p : points) count += p.ok ? 0 : 1;
  return count;
}

std::string VerificationReport::serialize_text() const {
  std::ostringstream out;
  out << "claim: " << claim << "\n";
  out << "kind: " << kind << "\n";
  out << "range: " << range << "\n";
  out << "points: " << points.size() << "\n";
  out << "pairs: " << pairs_checked << "\n";
  out << "failures: " << failure_count() << "\n";
  out << "status: " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const CheckPoint& p : points) {
    out << (p.ok ? "ok   " : "FAIL ") << p.params << " | expected " << p.expected
        << " | observed " << p.observed << "\n";
  }
  return out.str();
}

namespace {

constexpr std::uint64_t kSeed = 0x9E3779B97F4A7C15ULL;
constexpr int kDefaultRandomPairs = 500;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t words_of_count(int n) { return std::uint64_t{3} << (n - 1); }

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::uint64_t catalan(int k) {
  // C(0..12): enough for desk-scale estimates.
  static const std::uint64_t table[] = {1,      1,      2,      5,       14,      42,     132,
                                        429,    1430,   4862,   16796,   58786,   208012};
  if (k < 0 || k > 12) return 1'000'000'000ULL;
  return table[k];
}

std::string set_to_string(const ParseWordSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    if (i > 0) out += ",";
    out += s.classes[i].canonical.ascii();
  }
  out += "}";
  return out;
}

struct PointResult {
  std::vector<CheckPoint> points;
  std::uint64_t pairs = 0;
};

void run_points(VerificationReport& report, int count, unsigned workers,
                const std::function<PointResult(int)>& task) {
  std::vector<PointResult> results(static_cast<std::size_t>(count));
  unsigned pool_size = std::min<unsigned>(workers, static_cast<unsigned>(count));
  if (pool_size <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = task(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        results[static_cast<std::size_t>(i)] = task(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (unsigned w = 0; w < pool_size; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (PointResult& r : results) {
    report.pairs_checked += r.pairs;
    for (CheckPoint& p : r.points) report.points.push_back(std::move(p));
  }
}

std::mt19937_64 rng_for(std::string_view claim, int n) {
  return std::mt19937_64(kSeed ^ fnv1a(claim) ^ (static_cast<std::uint64_t>(n) << 32));
}

std::string pair_string(const TreePair& p) {
  return "t1=" + serialize(p.t1) + " t2=" + serialize(p.t2);
}

// ---- family claims (closed-form set vs brute force) --------------------------

CheckPoint check_family_point(const std::string& params, const ParseWordSet& expected,
                              const TreePair& pair) {
  ParseWordSet observed = parse_words(pair);
  CheckPoint point;
  point.params = params;
  point.expected = set_to_string(expected);
  point.observed = set_to_string(observed);
  point.ok = expected.classes == observed.classes &&
             observed.raw_count == 6 * observed.classes.size();
  return point;
}

void run_comb_comb(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "n=2.." + std::to_string(max_n);
  run_points(report, max_n - 1, workers, [](int idx) {
    int n = idx + 2;
    PointResult r;
    r.pairs = 1;
    r.points.push_back(check_family_point(
        "n=" + std::to_string(n), comb_comb_words(n),
        TreePair(left_comb_tree(n), right_comb_tree(n))));
    return r;
  });
}

void run_turn_turn(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "m>=1, n>=3, m+n<=" + std::to_string(max_n);
  std::vector<std::pair<int, int>> params;
  for (int s = 4; s <= max_n; ++s) {
    for (int m = 1; m <= s - 3; ++m) params.emplace_back(m, s - m);
  }
  run_points(report, static_cast<int>(params.size()), workers, [&params](int idx) {
    auto [m, n] = params[static_cast<std::size_t>(idx)];
    PointResult r;
    r.pairs = 1;
    r.points.push_back(check_family_point(
        "m=" + std::to_string(m) + " n=" + std::to_string(n), turn_turn_words(m, n),
        TreePair(left_turn_tree(m, n), right_turn_tree(1, m + n - 1))));
    return r;
  });
}

void run_comb_crooked(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "n=2.." + std::to_string(max_n);
  run_points(report, max_n - 1, workers, [](int idx) {
    int n = idx + 2;
    PointResult r;
    r.pairs = 1;
    r.points.push_back(check_family_point(
        "n=" + std::to_string(n), comb_crooked_words(n),
        TreePair(left_comb_tree(n), right_crooked_tree(n))));
    return r;
  });
}

void run_comb_crooked2(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "n=3.." + std::to_string(max_n);
  run_points(report, max_n - 2, workers, [](int idx) {
    int n = idx + 3;
    PointResult r;
    r.pairs = 1;
    r.points.push_back(check_family_point(
        "n=" + std::to_string(n), comb_crooked2_words(n),
        TreePair(left_comb_tree(n), left_crooked_tree(n))));
    return r;
  });
}

void run_crooked_crooked(VerificationReport& report, int max_n, int, unsigned workers) {
  int member_max = std::min(max_n, 12);
  report.range = "count n=2.." + std::to_string(max_n) + ", membership n=2.." +
                 std::to_string(member_max);
  run_points(report, max_n - 1, workers, [member_max](int idx) {
    int n = idx + 2;
    PointResult r;
    r.pairs = 1;
    TreePair pair(left_crooked_tree(n), right_crooked_tree(n));
    std::uint64_t expected = crooked_crooked_count(n);
    std::uint64_t observed = count_parse_words(pair);
    CheckPoint count_point;
    count_point.params = "n=" + std::to_string(n) + " count";
    count_point.expected = std::to_string(expected);
    count_point.observed = std::to_string(observed);
    count_point.ok = expected == observed;
    r.points.push_back(count_point);
    if (n <= member_max) {
      // Membership must characterize the common parse words over the whole
      // 3^n word space.
      ParsePlan plan1(pair.t1), plan2(pair.t2);
      std::string scratch;
      std::string ascii(static_cast<std::size_t>(n), '0');
      std::uint64_t mismatches = 0;
      std::uint64_t total = pow_u64(3, n);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
          ascii[static_cast<std::size_t>(i)] = static_cast<char>('0' + c % 3);
          c /= 3;
        }
        bool common = plan1.parses(ascii, scratch) && plan2.parses(ascii, scratch);
        bool member = crooked_crooked_membership(Word(ascii));
        if (common != member) ++mismatches;
      }
      CheckPoint member_point;
      member_point.params = "n=" + std::to_string(n) + " membership";
      member_point.expected = "0 mismatches over 3^n words";
      member_point.observed = std::to_string(mismatches) + " mismatches";
      member_point.ok = mismatches == 0;
      r.points.push_back(member_point);
    }
    return r;
  });
}

void run_shared_bottom(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "path pairs n=3.." + std::to_string(max_n);
  run_points(report, max_n - 2, workers, [](int idx) {
    int n = idx + 3;
    PointResult r;
    std::vector<Tree> trees = all_path_trees(n);
    std::uint64_t bad = 0;
    std::string detail;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++r.pairs;
        int b1 = bottom_leaf_pairs(pair.t1).front();
        int b2 = bottom_leaf_pairs(pair.t2).front();
        bool shares = b1 == b2 || b1 == b2 + 1 || b1 + 1 == b2;
        std::optional<Word> witness = shared_bottom_witness(pair);
        bool ok = witness.has_value() == shares;
        if (witness) {
          // One letter 1 among 0s, and a parse word of both trees
          // (shared_bottom_witness verifies parsing internally).
          ok = ok && witness->count('1') == 1 && witness->count('2') == 0;
        }
        if (!ok && ++bad == 1) detail = pair_string(pair);
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "witness iff shared bottom leaf, word 0^(k-1) 1 0^(n-k)";
    point.observed = bad == 0 ? "all pairs conform"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_bottom_bottom(VerificationReport& report, int max_n, int pairs, unsigned workers) {
  report.range = std::to_string(pairs) + " random pairs per n=3.." + std::to_string(max_n) +
                 ", every site, seed=0x9e3779b97f4a7c15";
  run_points(report, max_n - 2, workers, [pairs](int idx) {
    int n = idx + 3;
    PointResult r;
    std::mt19937_64 rng = rng_for("bottom-bottom", n);
    std::uint64_t bad = 0;
    std::string detail;
    for (int trial = 0; trial < pairs; ++trial) {
      TreePair base(random_tree(n, rng), random_tree(n, rng));
      std::uint64_t base_count = count_parse_words(base);
      for (int site = 1; site <= n; ++site) {
        ++r.pairs;
        TreePair extended(attach_cherry(base.t1, site), attach_cherry(base.t2, site));
        std::uint64_t extended_count = count_parse_words(extended);
        if (extended_count != 2 * base_count && ++bad == 1) {
          detail = pair_string(base) + " site=" + std::to_string(site);
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "attaching a cherry to both trees doubles the class count";
    point.observed = bad == 0 ? "all extensions doubled"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_bottom_comb(VerificationReport& report, int max_n, int pairs, unsigned workers) {
  report.range = std::to_string(pairs) + " random pairs per n=3.." + std::to_string(max_n) +
                 ", every site, seed=0x9e3779b97f4a7c15";
  run_points(report, max_n - 2, workers, [pairs](int idx) {
    int n = idx + 3;
    PointResult r;
    std::mt19937_64 rng = rng_for("bottom-comb", n);
    std::uint64_t bad = 0;
    std::string detail;
    for (int trial = 0; trial < pairs; ++trial) {
      TreePair base(random_tree(n, rng), random_tree(n, rng));
      std::uint64_t base_count = count_parse_words(base);
      for (int site = 1; site <= n; ++site) {
        ++r.pairs;
        TreePair extended(attach_cherry(base.t1, site), duplicate_leaf(base.t2, site));
        std::uint64_t extended_count = count_parse_words(extended);
        if (extended_count != base_count && ++bad == 1) {
          detail = pair_string(base) + " site=" + std::to_string(site);
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "cherry on one tree + duplication on the other preserves the class count";
    point.observed = bad == 0 ? "all extensions preserved"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_comb_general(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all trees, n=2.." + std::to_string(max_n);
  run_points(report, max_n - 1, workers, [](int idx) {
    int n = idx + 2;
    PointResult r;
    Tree left_comb = left_comb_tree(n);
    Tree right_comb = right_comb_tree(n);
    std::uint64_t bad = 0;
    std::string detail;
    for (const Tree& t : all_trees(n)) {
      ++r.pairs;
      std::uint64_t expected_left = std::uint64_t{1} << (leaf_level(t, 1) - 1);
      std::uint64_t expected_right = std::uint64_t{1} << (leaf_level(t, n) - 1);
      std::uint64_t observed_left = count_parse_words(TreePair(t, left_comb));
      std::uint64_t observed_right = count_parse_words(TreePair(t, right_comb));
      if ((observed_left != expected_left || observed_right != expected_right) && ++bad == 1) {
        detail = "t=" + serialize(t);
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "count vs left comb = 2^(level(leaf 1)-1), mirrored for right comb";
    point.observed = bad == 0 ? "all trees conform"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_turn_general(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all trees x all left turn trees, n=4.." + std::to_string(max_n);
  run_points(report, max_n - 3, workers, [](int idx) {
    int n = idx + 4;
    PointResult r;
    std::vector<Tree> turns;
    for (int m = 1; m <= n - 2; ++m) turns.push_back(left_turn_tree(m, n - m));
    std::uint64_t bad = 0;
    std::string detail;
    for (const Tree& t : all_trees(n)) {
      for (const Tree& turn : turns) {
        ++r.pairs;
        TreePair pair(t, turn);
        if (!has_common_parse_word(pair) && ++bad == 1) detail = pair_string(pair);
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "every pair has a common parse word";
    point.observed = bad == 0 ? "all pairs nonempty"
                              : std::to_string(bad) + " empty pairs, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_unique_turn(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "max(2,k-m+2)<=n<=k, m+n<=" + std::to_string(max_n);
  std::vector<std::array<int, 3>> params;
  for (int s = 4; s <= max_n; ++s) {
    for (int m = 1; m <= s - 2; ++m) {
      int n = s - m;
      for (int k = n; m + n - k >= 2; ++k) {
        if (n <= k && n >= std::max(2, k - m + 2)) params.push_back({m, n, k});
      }
    }
  }
  run_points(report, static_cast<int>(params.size()), workers, [&params](int idx) {
    auto [m, n, k] = params[static_cast<std::size_t>(idx)];
    PointResult r;
    r.pairs = 1;
    TreePair pair(left_turn_tree(m, n), right_turn_tree(k, m + n - k));
    std::uint64_t observed = count_parse_words(pair);
    CheckPoint point;
    point.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    point.expected = "1";
    point.observed = std::to_string(observed);
    point.ok = observed == 1;
    r.points.push_back(point);
    return r;
  });
}

void run_turn_count(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all well-formed (m,n,k) with m+n<=" + std::to_string(max_n);
  std::vector<std::array<int, 3>> params;
  for (int s = 3; s <= max_n; ++s) {
    for (int m = 1; m <= s - 2; ++m) {
      int n = s - m;
      for (int k = 1; m + n - k >= 2; ++k) params.push_back({m, n, k});
    }
  }
  run_points(report, static_cast<int>(params.size()), workers, [&params](int idx) {
    auto [m, n, k] = params[static_cast<std::size_t>(idx)];
    PointResult r;
    r.pairs = 1;
    TreePair pair(left_turn_tree(m, n), right_turn_tree(k, m + n - k));
    std::uint64_t expected = turn_pair_count(m, n, k);
    std::uint64_t observed = count_parse_words(pair);
    CheckPoint point;
    point.params = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    point.expected = std::to_string(expected);
    point.observed = std::to_string(observed);
    point.ok = expected == observed;
    r.points.push_back(point);
    return r;
  });
}

void run_recurrence(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "m,k=1.." + std::to_string(max_n);
  run_points(report, 4, workers, [max_n](int idx) {
    PointResult r;
    CheckPoint point;
    point.ok = true;
    switch (idx) {
      case 0: {
        point.params = "initial-conditions";
        point.expected = "a(1,1)=1 a(1,2)=1 a(1,3)=1 a(2,2)=4 a(2,3)=5 a(3,3)=3";
        const std::array<std::array<int, 3>, 6> cases = {{{1, 1, 1},
                                                          {1, 2, 1},
                                                          {1, 3, 1},
                                                          {2, 2, 4},
                                                          {2, 3, 5},
                                                          {3, 3, 3}}};
        std::string got;
        for (const auto& c : cases) {
          long long v = turn_base_count(c[0], c[1]);
          r.pairs += 1;
          got += (got.empty() ? "" : " ") + std::to_string(v);
          if (v != c[2]) point.ok = false;
        }
        point.observed = got;
        break;
      }
      case 1: {
        point.params = "recurrence";
        point.expected = "a(m+3,k) - 2a(m+2,k) - a(m+1,k) + 2a(m,k) = 0";
        std::uint64_t bad = 0;
        for (int k = 1; k <= max_n; ++k) {
          for (int m = 1; m + 3 <= max_n + 3; ++m) {
            r.pairs += 1;
            long long lhs = turn_base_count(m + 3, k) - 2 * turn_base_count(m + 2, k) -
                            turn_base_count(m + 1, k) + 2 * turn_base_count(m, k);
            if (lhs != 0) ++bad;
          }
        }
        point.observed = std::to_string(bad) + " violations";
        point.ok = bad == 0;
        break;
      }
      case 2: {
        point.params = "symmetry";
        point.expected = "a(m,k) = a(k,m)";
        std::uint64_t bad = 0;
        for (int m = 1; m <= max_n; ++m) {
          for (int k = 1; k <= max_n; ++k) {
            r.pairs += 1;
            if (turn_base_count(m, k) != turn_base_count(k, m)) ++bad;
          }
        }
        point.observed = std::to_string(bad) + " violations";
        point.ok = bad == 0;
        break;
      }
      case 3: {
        point.params = "comb-case";
        point.expected = "a(1,k) = 1";
        std::uint64_t bad = 0;
        for (int k = 1; k <= max_n; ++k) {
          r.pairs += 1;
          if (turn_base_count(1, k) != 1) ++bad;
        }
        point.observed = std::to_string(bad) + " violations";
        point.ok = bad == 0;
        break;
      }
    }
    r.points.push_back(point);
    return r;
  });
}

void run_alternating(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "m=2.." + std::to_string(max_n);
  run_points(report, max_n - 1, workers, [](int idx) {
    int m = idx + 2;
    PointResult r;
    r.pairs = 1;
    // Direct enumeration oracle: walk the binary choice tree of alternating
    // words starting with 0.
    std::uint64_t first = 0, second = 0;
    std::string w(static_cast<std::size_t>(m), '0');
    std::function<void(int)> walk = [&](int pos) {
      if (pos == m) {
        char last = w[static_cast<std::size_t>(m - 1)];
        if (last != '0') ++first;           // ends in 1 or 2
        if (last != '1') ++second;          // ends in 0 or 2
        return;
      }
      char prev = w[static_cast<std::size_t>(pos - 1)];
      for (char c : {'0', '1', '2'}) {
        if (c == prev) continue;
        w[static_cast<std::size_t>(pos)] = c;
        walk(pos + 1);
      }
    };
    walk(1);
    auto [a, b] = alternating_counts(m);
    CheckPoint point;
    point.params = "m=" + std::to_string(m);
    point.expected = std::to_string(a) + "," + std::to_string(b);
    point.observed = std::to_string(first) + "," + std::to_string(second);
    point.ok = a == first && b == second;
    r.points.push_back(point);
    return r;
  });
}

void run_triplication(VerificationReport& report, int max_n, int pairs, unsigned workers) {
  report.range = std::to_string(pairs) + " random pairs per n=3.." + std::to_string(max_n) +
                 ", every site and class, seed=0x9e3779b97f4a7c15";
  run_points(report, max_n - 2, workers, [pairs](int idx) {
    int n = idx + 3;
    PointResult r;
    std::mt19937_64 rng = rng_for("triplication", n);
    std::uint64_t bad = 0;
    std::string detail;
    for (int trial = 0; trial < pairs; ++trial) {
      TreePair base(random_tree(n, rng), random_tree(n, rng));
      ParseWordSet words = parse_words(base);
      for (int site = 1; site <= n; ++site) {
        ++r.pairs;
        TreePair extended(triplicate_leaf(base.t1, site), triplicate_leaf(base.t2, site));
        for (const WordClass& c : words.classes) {
          Word lifted = triplication_word_lift(c.canonical, site);
          if (!(parses(extended.t1, lifted) && parses(extended.t2, lifted))) {
            if (++bad == 1) {
              detail = pair_string(base) + " site=" + std::to_string(site) + " word=" +
                       c.canonical.ascii();
            }
          }
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "every common parse word lifts to the triplicated pair";
    point.observed = bad == 0 ? "all lifts verified"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

// Path trees for the end-configuration claims: leaf 1 on level 1 in t1
// (path word starts with r), leaf n on level 1 in t2 (starts with l).
std::vector<Tree> config_trees_first(int n) {
  std::vector<Tree> out;
  for (const Tree& t : all_path_trees(n)) {
    if (leaf_level(t, 1) == 1) out.push_back(t);
  }
  return out;
}

std::vector<Tree> config_trees_second(int n) {
  std::vector<Tree> out;
  for (const Tree& t : all_path_trees(n)) {
    if (leaf_level(t, t.leaf_count()) == 1) out.push_back(t);
  }
  return out;
}

void run_01v1(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "path pairs n=3.." + std::to_string(max_n) +
                 " with leaf 1 on level 1 in t1 and leaf n on level 1 in t2";
  run_points(report, max_n - 2, workers, [](int idx) {
    int n = idx + 3;
    PointResult r;
    std::uint64_t bad_01v1 = 0, bad_01v2 = 0;
    std::string detail;
    for (const Tree& t1 : config_trees_first(n)) {
      for (const Tree& t2 : config_trees_second(n)) {
        TreePair pair(t1, t2);
        ++r.pairs;
        ParseWordSet words = parse_words(pair);
        for (const WordClass& c : words.classes) {
          ClassFlags flags = class_predicates(c);
          if (flags.is_01v1) {
            if (++bad_01v1 == 1) detail = pair_string(pair) + " class=" + c.canonical.ascii();
          }
          if (flags.is_01v2 &&
              !(leaf_level(t1, 2) == 2 && leaf_level(t2, n - 1) == 2)) {
            if (++bad_01v2 == 1) detail = pair_string(pair) + " class=" + c.canonical.ascii();
          }
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "no 01v1 class; 01v2 classes force leaf 2 of t1 and leaf n-1 of t2 onto level 2";
    point.observed = (bad_01v1 + bad_01v2) == 0
                         ? "no violations"
                         : std::to_string(bad_01v1) + "+" + std::to_string(bad_01v2) +
                               " violations, first: " + detail;
    point.ok = bad_01v1 + bad_01v2 == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_vector_bijection(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all tree pairs n=2.." + std::to_string(max_n);
  run_points(report, max_n - 1, workers, [](int idx) {
    int n = idx + 2;
    PointResult r;
    std::vector<Tree> trees = all_trees(n);
    std::uint64_t bad = 0;
    std::string detail;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++r.pairs;
        ParsePlan plan1(pair.t1), plan2(pair.t2);
        std::string scratch, ascii;
        std::uint64_t tuples = 0;
        bool tau_ok = true;
        for_each_nonzero_tuple(pair.t1, pair.t2, [&](std::span<const SignedVector> vs) {
          ++tuples;
          ascii.clear();
          for (SignedVector v : vs) ascii.push_back(tau(v));
          if (!(plan1.parses(ascii, scratch) && plan2.parses(ascii, scratch))) tau_ok = false;
          return true;
        });
        std::uint64_t classes = count_parse_words(pair);
        if ((tuples != 6 * classes || !tau_ok) && ++bad == 1) detail = pair_string(pair);
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "nonzero tuples = 6 x classes, tau maps tuples to common parse words";
    point.observed = bad == 0 ? "all pairs conform"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_root_parity(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all trees and their words, n=1.." + std::to_string(max_n) +
                 "; unparseable parity classes n<=5";
  run_points(report, max_n, workers, [](int idx) {
    int n = idx + 1;
    PointResult r;
    std::uint64_t bad = 0;
    std::string detail;
    std::vector<Tree> trees = all_trees(n);
    for (const Tree& t : trees) {
      ++r.pairs;
      WordStream stream(t);
      while (stream.next()) {
        auto expected = root_letter_by_parity(stream.word());
        if (!expected || *expected != stream.labeling().root_label()) {
          if (++bad == 1) detail = "t=" + serialize(t) + " w=" + stream.word().ascii();
        }
      }
    }
    if (n <= 5) {
      // Words whose three letter counts share one parity must be unparseable.
      std::vector<ParsePlan> plans;
      plans.reserve(trees.size());
      for (const Tree& t : trees) plans.emplace_back(t);
      std::string ascii(static_cast<std::size_t>(n), '0');
      std::uint64_t total = pow_u64(3, n);
      std::string scratch;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
          ascii[static_cast<std::size_t>(i)] = static_cast<char>('0' + c % 3);
          c /= 3;
        }
        if (root_letter_by_parity(Word(ascii))) continue;
        for (const ParsePlan& plan : plans) {
          if (plan.parses(ascii, scratch) && ++bad == 1) {
            detail = "t=" + serialize(plan.tree()) + " w=" + ascii;
          }
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "root label matches the parity rule; bad-parity words unparseable";
    point.observed = bad == 0 ? "all words conform"
                              : std::to_string(bad) + " violations, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_total_ambiguity(VerificationReport& report, int max_n, int, unsigned workers) {
  int binary_max = std::min(max_n, 8);
  report.range = "path pairs n=2.." + std::to_string(max_n) + ", binary pairs n=2.." +
                 std::to_string(binary_max);
  int path_points = max_n - 1;
  int binary_points = binary_max - 1;
  run_points(report, path_points + binary_points, workers, [max_n, path_points](int idx) {
    bool path_space = idx < path_points;
    int n = path_space ? idx + 2 : idx - path_points + 2;
    PointResult r;
    std::vector<Tree> trees = path_space ? all_path_trees(n) : all_trees(n);
    std::uint64_t bad = 0;
    std::string detail;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++r.pairs;
        std::optional<Word> word = splice_solve(pair);
        bool ok = word && parses(pair.t1, *word) && parses(pair.t2, *word);
        if (!ok && ++bad == 1) detail = pair_string(pair);
      }
    }
    CheckPoint point;
    point.params = std::string(path_space ? "path" : "binary") + " n=" + std::to_string(n);
    point.expected = "splice_solve returns a verified common parse word";
    point.observed = bad == 0 ? "all pairs solved"
                              : std::to_string(bad) + " failures, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_duplication(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "all binary pairs n=2.." + std::to_string(max_n) +
                 " duplicated at every site";
  run_points(report, max_n - 1, workers, [](int idx) {
    int n = idx + 2;
    PointResult r;
    std::vector<Tree> trees = all_trees(n);
    std::uint64_t bad = 0;
    std::string detail;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        for (int site = 1; site <= n; ++site) {
          TreePair dup(duplicate_leaf(trees[i], site), duplicate_leaf(trees[j], site));
          ++r.pairs;
          auto witness = first_common_word_if(dup, [site](const Word& w) {
            return w.at(site - 1) == w.at(site);
          });
          if (!witness && ++bad == 1) {
            detail = "t1=" + serialize(trees[i]) + " t2=" + serialize(trees[j]) +
                     " site=" + std::to_string(site);
          }
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "duplicated pair has a parse word with equal letters at the site";
    point.observed = bad == 0 ? "witness found for every duplication"
                              : std::to_string(bad) + " misses, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

void run_level_tuple(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "path pairs n=4.." + std::to_string(max_n) +
                 " with leaf 1 on level 1 in t1 and leaf n on level 1 in t2";
  run_points(report, max_n - 3, workers, [](int idx) {
    int n = idx + 4;
    PointResult r;
    std::uint64_t bad1 = 0, bad2 = 0, bad3 = 0, bad3w = 0, bad3s = 0;
    std::string d1, d2, d3;
    for (const Tree& t1 : config_trees_first(n)) {
      for (const Tree& t2 : config_trees_second(n)) {
        TreePair pair(t1, t2);
        ++r.pairs;
        ParseWordSet words = parse_words(pair);
        bool any_00v = false, any_v00 = false, any_01v00 = false;
        for (const WordClass& c : words.classes) {
          ClassFlags flags = class_predicates(c);
          any_00v |= flags.has_00v;
          any_v00 |= flags.has_v00;
          any_01v00 |= flags.is_01v00;
        }
        CrookednessReport crooked = crookedness(pair);
        // Bullet 1: no 00v and no v00 => unique class.
        if (!any_00v && !any_v00 && words.classes.size() != 1 && ++bad1 == 1) {
          d1 = pair_string(pair);
        }
        if (!any_00v) {
          // Bullet 2: mutually crooked => some 01v00 class.
          if (crooked.mutually_crooked() && !any_01v00 && ++bad2 == 1) d2 = pair_string(pair);
          // Bullet 3: the level tuple is (2,3) or (k,2), with k bounded for
          // (weakly) mutually crooked pairs.
          int l2 = leaf_level(t1, 2);
          int r2 = leaf_level(t2, n - 1);
          bool tuple_ok = (l2 == 2 && r2 == 3) || (r2 == 2 && l2 >= 2);
          if (!tuple_ok && ++bad3 == 1) d3 = pair_string(pair);
          if (tuple_ok && r2 == 2) {
            if (crooked.weakly_mutually_crooked() && l2 > 4 && ++bad3w == 1) d3 = pair_string(pair);
            if (crooked.mutually_crooked() && l2 > 3 && ++bad3s == 1) d3 = pair_string(pair);
          }
        }
      }
    }
    CheckPoint b1{"n=" + std::to_string(n) + " bullet1",
                  "no 00v/v00 parse word => unique class",
                  bad1 == 0 ? "holds" : std::to_string(bad1) + " violations, first: " + d1,
                  bad1 == 0};
    CheckPoint b2{"n=" + std::to_string(n) + " bullet2",
                  "no 00v + mutually crooked => some 01v00 class",
                  bad2 == 0 ? "holds" : std::to_string(bad2) + " violations, first: " + d2,
                  bad2 == 0};
    CheckPoint b3{"n=" + std::to_string(n) + " bullet3",
                  "no 00v => level tuple (2,3) or (k,2); k<=4 weakly crooked, k<=3 crooked",
                  (bad3 + bad3w + bad3s) == 0
                      ? "holds"
                      : std::to_string(bad3) + "+" + std::to_string(bad3w) + "+" +
                            std::to_string(bad3s) + " violations, first: " + d3,
                  bad3 + bad3w + bad3s == 0};
    r.points.push_back(b1);
    r.points.push_back(b2);
    r.points.push_back(b3);
    return r;
  });
}

void run_u00v(VerificationReport& report, int max_n, int, unsigned workers) {
  report.range = "path pairs n=4.." + std::to_string(max_n);
  run_points(report, max_n - 3, workers, [](int idx) {
    int n = idx + 4;
    PointResult r;
    std::vector<Tree> trees = all_path_trees(n);
    std::uint64_t bad = 0;
    std::string detail;
    auto has_adjacent_equal = [](const Word& w) {
      for (int i = 0; i + 1 < w.size(); ++i) {
        if (w.at(i) == w.at(i + 1)) return true;
      }
      return false;
    };
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = i; j < trees.size(); ++j) {
        TreePair pair(trees[i], trees[j]);
        ++r.pairs;
        if (!first_common_word_if(pair, has_adjacent_equal) && ++bad == 1) {
          detail = pair_string(pair);
        }
      }
    }
    CheckPoint point;
    point.params = "n=" + std::to_string(n);
    point.expected = "every path pair parses a word with adjacent equal letters";
    point.observed = bad == 0 ? "witness found for every pair"
                              : std::to_string(bad) + " misses, first: " + detail;
    point.ok = bad == 0;
    r.points.push_back(point);
    return r;
  });
}

// ---- registry ---------------------------------------------------------------

struct ClaimDef {
  ClaimInfo info;
  int default_max_n;
  std::uint64_t (*estimate)(int max_n, int pairs);
  void (*run)(VerificationReport&, int max_n, int pairs, unsigned workers);
};

std::uint64_t est_family(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 2; n <= max_n; ++n) total += words_of_count(n);
  return total;
}

std::uint64_t est_turn_turn(int max_n, int) {
  std::uint64_t total = 0;
  for (int s = 4; s <= max_n; ++s) total += static_cast<std::uint64_t>(s) * words_of_count(s);
  return total;
}

std::uint64_t est_crooked(int max_n, int) {
  std::uint64_t total = est_family(max_n, 0);
  for (int n = 2; n <= std::min(max_n, 12); ++n) total += pow_u64(3, n);
  return total;
}

std::uint64_t est_path_pairs(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 3; n <= max_n; ++n) total += pow_u64(4, n - 2) * static_cast<std::uint64_t>(n);
  return total;
}

std::uint64_t est_path_pairs_words(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 3; n <= max_n; ++n) total += pow_u64(4, n - 2) / 2 * words_of_count(n);
  return total;
}

std::uint64_t est_random_sites(int max_n, int pairs) {
  std::uint64_t total = 0;
  for (int n = 3; n <= max_n; ++n) {
    total += static_cast<std::uint64_t>(pairs) * static_cast<std::uint64_t>(n + 1) *
             words_of_count(n + 1);
  }
  return total;
}

std::uint64_t est_comb_general(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 2; n <= max_n; ++n) total += 2 * catalan(n - 1) * words_of_count(n);
  return total;
}

std::uint64_t est_turn_general(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 4; n <= max_n; ++n) {
    total += static_cast<std::uint64_t>(n) * catalan(n - 1) * words_of_count(n);
  }
  return total;
}

std::uint64_t est_turn_triples(int max_n, int) {
  std::uint64_t total = 0;
  for (int s = 3; s <= max_n; ++s) {
    total += static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s) * words_of_count(s);
  }
  return total;
}

std::uint64_t est_const(int, int) { return 1'000'000; }

std::uint64_t est_alternating(int max_n, int) { return pow_u64(2, max_n); }

std::uint64_t est_vector(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t pairs = catalan(n - 1) * catalan(n - 1) / 2 + 1;
    total += pairs * (pow_u64(3, n) * 2 + words_of_count(n));
  }
  return total;
}

std::uint64_t est_root_parity(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 1; n <= max_n; ++n) total += catalan(n - 1) * words_of_count(n);
  for (int n = 1; n <= std::min(max_n, 5); ++n) total += catalan(n - 1) * pow_u64(3, n);
  return total;
}

std::uint64_t est_total_ambiguity(int max_n, int) {
  std::uint64_t total = est_path_pairs_words(max_n, 0);
  for (int n = 2; n <= std::min(max_n, 8); ++n) {
    total += catalan(n - 1) * catalan(n - 1) / 2 * words_of_count(n);
  }
  return total;
}

std::uint64_t est_duplication(int max_n, int) {
  std::uint64_t total = 0;
  for (int n = 2; n <= max_n; ++n) {
    total += catalan(n - 1) * catalan(n - 1) / 2 * static_cast<std::uint64_t>(n) *
             words_of_count(n + 1);
  }
  return total;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> table = {
      {{"comb-comb", "theorem",
        "opposite combs have the single closed-form parse word class",
        "n=2..14"},
       14, est_family, run_comb_comb},
      {{"turn-turn", "theorem",
        "left turn vs single-step right turn trees have the closed-form two-class set",
        "m+n<=14"},
       14, est_turn_turn, run_turn_turn},
      {{"comb-crooked", "theorem",
        "left comb vs right crooked trees have the closed-form singleton class",
        "n=2..14"},
       14, est_family, run_comb_crooked},
      {{"comb-crooked2", "theorem",
        "left comb vs left crooked trees have the closed-form two-class set",
        "n=3..14"},
       14, est_family, run_comb_crooked2},
      {{"crooked-crooked", "theorem",
        "opposite crooked trees have 2^(floor(n/2)-1) classes with the mirror membership rule",
        "n=2..14 (membership to 12)"},
       14, est_crooked, run_crooked_crooked},
      {{"shared-bottom", "theorem",
        "path pairs sharing a bottom leaf parse a one-one word 0^(k-1) 1 0^(n-k)",
        "n=3..12"},
       12, est_path_pairs, run_shared_bottom},
      {{"bottom-bottom", "theorem",
        "attaching a cherry to leaf i of both trees doubles the class count",
        "500 pairs per n=3..10"},
       10, est_random_sites, run_bottom_bottom},
      {{"bottom-comb", "theorem",
        "cherry on one tree plus leaf duplication on the other preserves the class count",
        "500 pairs per n=3..10"},
       10, est_random_sites, run_bottom_comb},
      {{"comb-general", "theorem",
        "any tree vs a comb has 2^(level of the outer leaf - 1) classes",
        "n=2..9"},
       9, est_comb_general, run_comb_general},
      {{"turn-general", "theorem",
        "every tree has a common parse word with every left turn tree",
        "n=4..9"},
       9, est_turn_general, run_turn_general},
      {{"unique-turn", "theorem",
        "turn-tree pairs in the overlap region have exactly one class",
        "m+n<=13"},
       13, est_turn_triples, run_unique_turn},
      {{"turn-count", "theorem",
        "the three-region turn-pair count formula matches brute force",
        "m+n<=13"},
       13, est_turn_triples, run_turn_count},
      {{"recurrence", "theorem",
        "the base turn count satisfies its initial conditions, recurrence and symmetry",
        "m,k<=12"},
       12, est_const, run_recurrence},
      {{"alternating", "theorem",
        "closed forms for the two alternating-word families match enumeration",
        "m=2..16"},
       16, est_alternating, run_alternating},
      {{"triplication", "theorem",
        "every common parse word lifts through leaf triplication",
        "500 pairs per n=3..8"},
       8, est_random_sites, run_triplication},
      {{"01v1", "theorem",
        "end-configured path pairs have no 01v1 class, and 01v2 classes force level-2 leaves",
        "n=3..10"},
       10, est_path_pairs_words, run_01v1},
      {{"vector-bijection", "theorem",
        "nonzero cross-product tuples = 6 x classes and tau maps tuples to parse words",
        "n=2..6"},
       6, est_vector, run_vector_bijection},
      {{"root-parity", "theorem",
        "the parsed root label always equals the letter-count parity rule",
        "n=1..8"},
       8, est_root_parity, run_root_parity},
      {{"total-ambiguity", "theorem",
        "every pair has a common parse word and splice_solve finds a verified one",
        "path n<=12, binary n<=8"},
       12, est_total_ambiguity, run_total_ambiguity},
      {{"duplication", "conjecture",
        "duplicated pairs parse a word with equal letters at the duplicated site",
        "base pairs n=2..7"},
       7, est_duplication, run_duplication},
      {{"level-tuple", "conjecture",
        "end-configured path pairs without 00v words satisfy the three level-tuple bullets",
        "n=4..10"},
       10, est_path_pairs_words, run_level_tuple},
      {{"u00v", "conjecture",
        "every path pair parses a word with adjacent equal letters",
        "n=4..10"},
       10, est_path_pairs_words, run_u00v},
  };
  return table;
}

const ClaimDef& find_claim(const std::string& id) {
  for (const ClaimDef& def : registry()) {
    if (def.info.id == id) return def;
  }
  throw UnknownClaim("unknown claim: " + id);
}

}  // namespace

const std::vector<ClaimInfo>& claim_table() {
  static const std::vector<ClaimInfo> table = [] {
    std::vector<ClaimInfo> out;
    for (const ClaimDef& def : registry()) out.push_back(def.info);
    return out;
  }();
  return table;
}

std::uint64_t estimate_claim_work(const std::string& id, const CampaignOptions& options) {
  const ClaimDef& def = find_claim(id);
  int max_n = options.max_n > 0 ? options.max_n : def.default_max_n;
  int pairs = options.random_pairs > 0 ? options.random_pairs : kDefaultRandomPairs;
  return def.estimate(max_n, pairs);
}

VerificationReport run_claim(const std::string& id, const CampaignOptions& options) {
  const ClaimDef& def = find_claim(id);
  int max_n = options.max_n > 0 ? options.max_n : def.default_max_n;
  int pairs = options.random_pairs > 0 ? options.random_pairs : kDefaultRandomPairs;
  std::uint64_t estimate = def.estimate(max_n, pairs);
  if (!options.force && estimate > options.budget) {
    throw RangeTooLarge("claim " + id + " estimated work " + std::to_string(estimate) +
                        " exceeds budget " + std::to_string(options.budget));
  }
  VerificationReport report;
  report.claim = def.info.id;
  report.kind = def.info.kind;
  auto start = std::chrono::steady_clock::now();
  unsigned workers = options.workers == 0 ? 1 : options.workers;
  def.run(report, max_n, pairs, workers);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace parseword
