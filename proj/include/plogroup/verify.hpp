#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace plogroup {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int word_pairs = 1000;       // normal-form soundness trials per rank
  int tree_roundtrips = 1000;  // random normal forms for the tree bijection
  int bump_trial_words = 500;  // bump correspondence sample
  int level_trial_words = 500; // level coherence sample
  int word_length = 10;
  int relator_rank_max = 5;
  long long alpha_bound = 2;
  int wc_point_count = 6;
  int tc_product_length = 4;
  int depth_rank_max = 4;
  int depth_word_length = 6;
  long long n_max = 8;  // bounded existential search in table 2 row 3
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the named verification suites (1..9, empty = all), printing one
/// "PASS criterion k" / "FAIL criterion k" line per suite to `progress` when
/// given.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::vector<int>& which = {},
                                            std::ostream* progress = nullptr);

const std::vector<std::pair<int, std::string>>& acceptance_suite_names();

}  // namespace plogroup
