// Command-line interface: parse words of binary tree pairs under the grammar
// 0 -> 12|21, 1 -> 02|20, 2 -> 01|10, plus family closed forms, reductions,
// and theorem/conjecture verification campaigns.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parseword/closed_forms.hpp"
#include "parseword/enumeration.hpp"
#include "parseword/grammar.hpp"
#include "parseword/reductions.hpp"
#include "parseword/tree.hpp"
#include "parseword/verify.hpp"

namespace {

using namespace parseword;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned workers_from_env() {
  const char* env = std::getenv("PARSEWORD_WORKERS");
  if (!env) return 1;
  long value = std::strtol(env, nullptr, 10);
  return value > 0 ? static_cast<unsigned>(value) : 1;
}

Tree tree_arg(const std::string& text) { return deserialize(text); }

std::string labeled_text(const Tree& t, const Labeling& lab) {
  // Leaf -> its letter; internal -> "(" left right ")" followed by its letter.
  std::string out;
  std::vector<std::pair<Vertex, Vertex>> pending;  // (internal vertex, subtree end)
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (!t.is_leaf(v)) {
      out.push_back('(');
      pending.emplace_back(v, t.subtree_end(v));
      continue;
    }
    out.push_back(lab.at(v));
    while (!pending.empty() && pending.back().second == v + 1) {
      out.push_back(')');
      out.push_back(lab.at(pending.back().first));
      pending.pop_back();
    }
  }
  return out;
}

int cmd_parse(const std::string& tree_text, const std::string& word_text) {
  Tree t = tree_arg(tree_text);
  Word w(word_text);
  auto labeling = parse(t, w);
  if (!labeling) {
    std::cout << "no valid labeling\n";
    return kExitFail;
  }
  std::cout << "word: " << w.ascii() << "\n";
  std::cout << "labels: " << labeled_text(t, *labeling) << "\n";
  std::cout << "root: " << labeling->root_label() << "\n";
  return kExitPass;
}

int cmd_enumerate(const std::string& t1, const std::string& t2, bool json) {
  TreePair pair(tree_arg(t1), tree_arg(t2));
  ParseWordSet words = parse_words(pair);
  for (const WordClass& c : words.classes) {
    if (json) {
      nlohmann::ordered_json line;
      line["class"] = c.canonical.ascii();
      std::cout << line.dump() << "\n";
    } else {
      std::cout << c.canonical.ascii() << "\n";
    }
  }
  if (json) {
    nlohmann::ordered_json summary;
    summary["classes"] = words.classes.size();
    summary["raw_count"] = words.raw_count;
    std::cout << summary.dump() << "\n";
  }
  return kExitPass;
}

int cmd_count(const std::string& t1, const std::string& t2) {
  TreePair pair(tree_arg(t1), tree_arg(t2));
  std::cout << count_parse_words(pair) << "\n";
  return kExitPass;
}

void print_set(const ParseWordSet& s) {
  for (const WordClass& c : s.classes) std::cout << c.canonical.ascii() << "\n";
}

int cmd_families(const std::string& theorem, int n, int m, int k,
                 const std::string& tree_text, bool check, bool literal) {
  ParseWordSet closed;
  std::vector<Word> literal_words;
  std::uint64_t closed_count = 0;
  bool set_valued = true;
  TreePair pair(Tree::leaf(), Tree::leaf());
  if (theorem == "comb-comb") {
    closed = comb_comb_words(n);
    literal_words = comb_comb_words_literal(n);
    pair = TreePair(left_comb_tree(n), right_comb_tree(n));
  } else if (theorem == "turn-turn") {
    closed = turn_turn_words(m, n);
    literal_words = turn_turn_words_literal(m, n);
    pair = TreePair(left_turn_tree(m, n), right_turn_tree(1, m + n - 1));
  } else if (theorem == "comb-crooked") {
    closed = comb_crooked_words(n);
    literal_words = comb_crooked_words_literal(n);
    pair = TreePair(left_comb_tree(n), right_crooked_tree(n));
  } else if (theorem == "comb-crooked2") {
    closed = comb_crooked2_words(n);
    literal_words = comb_crooked2_words_literal(n);
    pair = TreePair(left_comb_tree(n), left_crooked_tree(n));
  } else if (theorem == "crooked-crooked") {
    set_valued = false;
    closed_count = crooked_crooked_count(n);
    pair = TreePair(left_crooked_tree(n), right_crooked_tree(n));
  } else if (theorem == "comb-general") {
    set_valued = false;
    Tree t = tree_arg(tree_text);
    closed_count = comb_general_count(t);
    pair = TreePair(t, left_comb_tree(t.leaf_count()));
  } else if (theorem == "turn-pair") {
    set_valued = false;
    closed_count = turn_pair_count(m, n, k);
    pair = TreePair(left_turn_tree(m, n), right_turn_tree(k, m + n - k));
  } else if (theorem == "turn-base") {
    set_valued = false;
    closed_count = static_cast<std::uint64_t>(turn_base_count(m, k));
    pair = TreePair(left_turn_tree(m, k + 1), right_turn_tree(k, m + 1));
  } else if (theorem == "alternating") {
    auto [a, b] = alternating_counts(m);
    std::cout << a << " " << b << "\n";
    return kExitPass;
  } else {
    std::cerr << "unknown theorem: " << theorem << "\n";
    return kExitUsage;
  }

  if (set_valued) {
    if (literal) {
      for (const Word& w : literal_words) std::cout << "literal: " << w.ascii() << "\n";
    }
    print_set(closed);
  } else {
    std::cout << closed_count << "\n";
  }
  if (check) {
    bool ok = set_valued ? parse_words(pair).classes == closed.classes
                         : count_parse_words(pair) == closed_count;
    std::cout << (ok ? "CHECK PASS" : "CHECK FAIL") << "\n";
    return ok ? kExitPass : kExitFail;
  }
  return kExitPass;
}

int cmd_reduce(const std::string& t1, const std::string& t2, bool trace) {
  TreePair pair(tree_arg(t1), tree_arg(t2));
  SpliceResult result = splice_solve_traced(pair);
  if (trace) {
    for (const ReductionStep& step : result.trace) {
      std::cout << "step: " << to_string(step.kind) << " at [" << step.site.lo << ".."
                << step.site.hi << "]";
      for (const TreePair& residue : step.residues) {
        std::cout << " -> " << serialize(residue.t1) << " | " << serialize(residue.t2);
      }
      std::cout << "\n";
    }
    if (result.used_brute_force) std::cout << "base: brute-force enumeration\n";
  }
  if (!result.word) {
    std::cout << "no common parse word\n";
    return kExitFail;
  }
  std::cout << "word: " << result.word->ascii() << "\n";
  std::cout << "class: " << canonicalize(*result.word).canonical.ascii() << "\n";
  return kExitPass;
}

int report_out(const VerificationReport& report, bool json) {
  if (json) {
    for (const CheckPoint& p : report.points) {
      nlohmann::ordered_json line;
      line["claim"] = report.claim;
      line["params"] = p.params;
      line["expected"] = p.expected;
      line["observed"] = p.observed;
      line["status"] = p.ok ? "ok" : "fail";
      std::cout << line.dump() << "\n";
    }
  } else {
    std::cout << report.serialize_text();
  }
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& claim, bool list, bool conjectures_only, int max_n,
               int random_pairs, std::uint64_t budget, bool force, bool json) {
  if (list) {
    // `verify --list` prints the whole claim table; `conjecture --list`
    // restricts to the conjectures.
    for (const ClaimInfo& info : claim_table()) {
      if (conjectures_only && info.kind != "conjecture") continue;
      std::cout << info.id << "\t" << info.kind << "\t" << info.default_range << "\t"
                << info.summary << "\n";
    }
    return kExitPass;
  }
  if (claim.empty()) {
    std::cerr << "missing --claim (or use --list)\n";
    return kExitUsage;
  }
  for (const ClaimInfo& info : claim_table()) {
    if (info.id == claim && conjectures_only != (info.kind == "conjecture")) {
      std::cerr << "error: claim " << claim << " is a " << info.kind << "; use the "
                << (info.kind == "conjecture" ? "conjecture" : "verify") << " subcommand\n";
      return kExitUsage;
    }
  }
  CampaignOptions options;
  options.max_n = max_n;
  options.random_pairs = random_pairs;
  options.workers = workers_from_env();
  options.budget = budget;
  options.force = force;
  VerificationReport report = run_claim(claim, options);
  return report_out(report, json);
}

int cmd_gen(int n, bool path_only, bool count_only) {
  std::vector<Tree> trees = path_only ? all_path_trees(n) : all_trees(n);
  if (count_only) {
    std::cout << trees.size() << "\n";
    return kExitPass;
  }
  for (const Tree& t : trees) std::cout << serialize(t) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parse-word toolkit for binary tree pairs"};
  app.require_subcommand(1);

  std::string tree_text, word_text, t1_text, t2_text, theorem, claim;
  int n = 0, m = 0, k = 0, max_n = 0, random_pairs = 0;
  std::uint64_t budget = 10'000'000'000ULL;
  bool json = false, check = false, trace = false, list = false, literal = false;
  bool path_only = false, count_only = false, force = false;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a word with a tree");
  parse_cmd->add_option("--tree", tree_text, "tree literal")->required();
  parse_cmd->add_option("--word", word_text, "word over 012")->required();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "common parse word classes of a pair");
  enum_cmd->add_option("--t1", t1_text)->required();
  enum_cmd->add_option("--t2", t2_text)->required();
  enum_cmd->add_flag("--json", json, "JSON-lines output");

  CLI::App* count_cmd = app.add_subcommand("count", "number of common parse word classes");
  count_cmd->add_option("--t1", t1_text)->required();
  count_cmd->add_option("--t2", t2_text)->required();

  CLI::App* fam_cmd = app.add_subcommand("families", "closed-form family sets and counts");
  fam_cmd->add_option("--theorem", theorem,
                      "comb-comb | turn-turn | comb-crooked | comb-crooked2 | "
                      "crooked-crooked | comb-general | turn-pair | turn-base | alternating")
      ->required();
  fam_cmd->add_option("--n", n);
  fam_cmd->add_option("--m", m);
  fam_cmd->add_option("--k", k);
  fam_cmd->add_option("--t1", tree_text, "tree for comb-general");
  fam_cmd->add_flag("--check", check, "compare against brute force");
  fam_cmd->add_flag("--literal", literal, "also print the pre-canonical instantiations");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "solve a pair by reductions");
  reduce_cmd->add_option("--t1", t1_text)->required();
  reduce_cmd->add_option("--t2", t2_text)->required();
  reduce_cmd->add_flag("--trace", trace, "print the reduction trace");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem verification campaign");
  verify_cmd->add_option("--claim", claim);
  verify_cmd->add_flag("--list", list, "list registered claims");
  verify_cmd->add_option("--max-n", max_n, "range override");
  verify_cmd->add_option("--random-pairs", random_pairs, "random pairs per point");
  verify_cmd->add_option("--budget", budget, "estimated word-check budget");
  verify_cmd->add_flag("--force", force, "bypass the budget guard");
  verify_cmd->add_flag("--json", json, "JSON-lines output");

  CLI::App* conj_cmd = app.add_subcommand("conjecture", "run a conjecture campaign");
  conj_cmd->add_option("--claim", claim);
  conj_cmd->add_flag("--list", list, "list registered conjectures");
  conj_cmd->add_option("--max-n", max_n, "range override");
  conj_cmd->add_option("--random-pairs", random_pairs, "random pairs per point");
  conj_cmd->add_option("--budget", budget, "estimated word-check budget");
  conj_cmd->add_flag("--force", force, "bypass the budget guard");
  conj_cmd->add_flag("--json", json, "JSON-lines output");

  CLI::App* gen_cmd = app.add_subcommand("gen", "list a tree space");
  gen_cmd->add_option("--n", n, "leaf count")->required();
  gen_cmd->add_flag("--path", path_only, "path trees only");
  gen_cmd->add_flag("--count", count_only, "print only the number of trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitPass;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(tree_text, word_text);
    if (enum_cmd->parsed()) return cmd_enumerate(t1_text, t2_text, json);
    if (count_cmd->parsed()) return cmd_count(t1_text, t2_text);
    if (fam_cmd->parsed()) return cmd_families(theorem, n, m, k, tree_text, check, literal);
    if (reduce_cmd->parsed()) return cmd_reduce(t1_text, t2_text, trace);
    if (verify_cmd->parsed()) {
      return cmd_verify(claim, list, false, max_n, random_pairs, budget, force, json);
    }
    if (conj_cmd->parsed()) {
      return cmd_verify(claim, list, true, max_n, random_pairs, budget, force, json);
    }
    if (gen_cmd->parsed()) return cmd_gen(n, path_only, count_only);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownClaim& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
