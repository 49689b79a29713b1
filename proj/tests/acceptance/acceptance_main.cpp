// Acceptance suite: runs every verification criterion at full scale and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cstdlib>
#include <iostream>

#include "plogroup/verify.hpp"

int main(int argc, char** argv) {
  plogroup::VerifyOptions opts;
  if (const char* env = std::getenv("PLOGROUP_SEED")) {
    opts.seed = static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
  }
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));

  auto results = plogroup::run_acceptance(opts, which, &std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return all ? 0 : 1;
}
