#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pursuit/report.hpp"

namespace pursuit {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus status);

/// `budget` caps the work of each criterion and each corpus item, counted
/// in solver states, adversary search nodes, claim subsets and game rounds.
/// Work beyond it is reported as a resource-limit skip.
struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 4'000'000'000ULL;
  std::string corpus;          // directory of edge lists; empty for none
  std::vector<int> criteria;   // subset of 1..10; empty for all
};

struct CheckResult {
  int id = 0;                  // criterion number, 0 for corpus items
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string summary;
  Json detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::vector<CheckResult> criteria;
  std::vector<CheckResult> corpus;

  bool any(CheckStatus status) const;
  Json to_json() const;
};

/// Runs one criterion in 1..9.
CheckResult run_criterion(int id, const VerifyOptions& options);

/// Criterion 10: reruns `ids` and compares the serialized results byte for byte.
CheckResult check_determinism(const std::vector<CheckResult>& first, const VerifyOptions& options);

/// Oracle, guard, confinement and recursion checks on one edge-list file.
CheckResult check_corpus_file(const std::string& path, const VerifyOptions& options);

/// Selected criteria (criterion 10 last) followed by the corpus, if any.
/// A corpus file that does not parse is a failed item.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace pursuit
