#pragma once

#include <string>
#include <vector>

namespace pursuit {

/// Rigorous enclosure [lo, hi] of a real, rounded outward to doubles.
struct Enclosure {
  double lo = 0;
  double hi = 0;

  bool exact() const { return lo == hi; }
  double mid() const { return lo == hi ? lo : lo / 2 + hi / 2; }
};

/// Log-space quantities of the asymptotic argument at L = log2 n. All logs
/// are binary. Evaluated in MPFR interval arithmetic.
struct BoundParams {
  double L = 0;
  int precision = 0;
  Enclosure sqrt_L;         // lambda_log: lambda = 2^sqrt(L)
  Enclosure log2_L;
  Enclosure t;              // sqrt(L) - 3 log2 L
  Enclosure p_log;          // 2 log2 L - sqrt(L)
  Enclosure p;              // 2^p_log
  Enclosure threshold_log;  // sqrt(L) - 3 log2 L
  Enclosure threshold;      // 2^threshold_log
  Enclosure mu_log;         // L + p_log: expected size of one cop set
  Enclosure total_cops_log; // L + 3 log2 L - sqrt(L): budget for all cop sets
  Enclosure f_log;          // 1 + L + 3 log2 L - sqrt(L)
};

BoundParams bound_params(double L, int precision = 256);

/// Certified bracket of the root L* > 1 of 2 L^3 2^-sqrt(L) = 1, i.e. of
/// h(L) = 1 + 3 log2 L - sqrt(L): h(lo) > 0 > h(hi) and hi - lo <= tolerance.
struct RootBracket {
  double lo = 0;
  double hi = 0;
  int iterations = 0;
};

RootBracket trivial_region_boundary(double tolerance = 1e-6, int precision = 256);

/// Sign of h(L) = 1 + 3 log2 L - sqrt(L): +1, -1, or 0 when not certified.
int trivial_region_sign(double L, int precision = 256);

struct ChainStep {
  std::string name;
  bool strict = false;  // strict steps need slack > 0, others slack >= 0
  bool holds = false;   // certified under outward rounding
  Enclosure slack;
  std::string scale;    // how the slack is normalized
};

/// Per-step check of the induction inequality chain at n = 2^L with a path of
/// D = 2^(threshold_log - gap) vertices deleted; gap = +infinity means D = 0.
/// Steps whose plain difference would cancel catastrophically are reported
/// in a normalized form named in `scale`.
struct ChainReport {
  double L = 0;
  double gap = 0;
  int precision = 0;
  bool in_regime = false;  // L >= 400 and gap >= 0
  Enclosure D_log;
  std::vector<ChainStep> steps;
  ChainStep end_to_end;  // f(n) - f(n - D) > 1, computed without the intermediate steps
  bool all_hold() const;
};

ChainReport check_induction_chain(double L, double gap = 0.0, int precision = 256);

}  // namespace pursuit
