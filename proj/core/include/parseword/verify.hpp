#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parseword/errors.hpp"

namespace parseword {

// Verification campaigns: each registered claim pins one statement about the
// grammar (a counting identity, an existence statement, or a conjecture) and
// checks it against brute force over a desk-scale range. Reports are
// deterministic: byte-identical across runs and worker counts (wall time is
// kept out of the serialized form).

struct CampaignOptions {
  int max_n = 0;            // 0 = claim default
  int random_pairs = 0;     // 0 = claim default (for randomized claims)
  unsigned workers = 1;     // parameter points evaluated in parallel
  std::uint64_t budget = 10'000'000'000ULL;  // estimated word-checks allowed
  bool force = false;       // bypass the budget guard
};

struct CheckPoint {
  std::string params;
  std::string expected;
  std::string observed;
  bool ok = true;
};

struct VerificationReport {
  std::string claim;
  std::string kind;  // "theorem" or "conjecture"
  std::string range;
  std::vector<CheckPoint> points;
  std::uint64_t pairs_checked = 0;
  double wall_seconds = 0;  // informational; not serialized

  bool pass() const;
  std::uint64_t failure_count() const;
  /// Deterministic plain-text form (excludes wall time).
  std::string serialize_text() const;
};

struct ClaimInfo {
  std::string id;
  std::string kind;  // "theorem" or "conjecture"
  std::string summary;
  std::string default_range;
};

/// All registered claims, theorems first, each in a fixed order.
const std::vector<ClaimInfo>& claim_table();

/// Runs one campaign. Throws UnknownClaim for unregistered ids and
/// RangeTooLarge when the estimated work exceeds options.budget (unless
/// options.force).
VerificationReport run_claim(const std::string& id, const CampaignOptions& options = {});

/// Estimated number of word-checks the campaign would perform.
std::uint64_t estimate_claim_work(const std::string& id, const CampaignOptions& options = {});

}  // namespace parseword
