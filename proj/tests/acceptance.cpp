// Runs acceptance criteria 1..10 and prints one line per criterion.
// Usage: acceptance [--json FILE] [--seed N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include "pursuit/verify.hpp"

int main(int argc, char** argv) {
  pursuit::VerifyOptions options;
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--json") == 0 && i + 1 < argc) {
      json_path = argv[++i];
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--json FILE] [--seed N]\n";
      return 2;
    }
  }

  pursuit::VerifyReport report;
  report.seed = options.seed;
  report.budget = options.budget;
  int failed = 0;
  auto print = [&](const pursuit::CheckResult& r, double seconds) {
    const char* tag = r.status == pursuit::CheckStatus::Pass ? "PASS" : r.status == pursuit::CheckStatus::Fail ? "FAIL" : "SKIP";
    std::printf("[%s] %2d %-22s %s (%.1fs)\n", tag, r.id, r.name.c_str(), r.summary.c_str(), seconds);
    std::fflush(stdout);
    failed += r.status == pursuit::CheckStatus::Pass ? 0 : 1;
  };
  for (int id = 1; id <= 9; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    report.criteria.push_back(pursuit::run_criterion(id, options));
    print(report.criteria.back(), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  const auto t0 = std::chrono::steady_clock::now();
  report.criteria.push_back(pursuit::check_determinism(report.criteria, options));
  print(report.criteria.back(), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  if (!json_path.empty()) std::ofstream(json_path) << report.to_json().dump(2) << '\n';
  std::printf("%d of 10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
