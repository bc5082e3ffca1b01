#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "pursuit/bounds.hpp"

using namespace pursuit;

TEST_CASE("parameters at L = 1024 are exact") {
  const BoundParams b = bound_params(1024);
  CHECK(b.t.exact());
  CHECK(b.t.lo == 2.0);
  CHECK(b.p.exact());
  CHECK(b.p.lo == std::ldexp(1.0, -12));
  CHECK(b.threshold.exact());
  CHECK(b.threshold.lo == 4.0);
  CHECK(b.f_log.lo == 1 + 1024 + 30 - 32);
  CHECK(b.mu_log.lo == 1024 - 12);
  CHECK_THROWS_AS(bound_params(0), std::invalid_argument);
}

TEST_CASE("enclosures are tight and contain the double evaluation") {
  for (double L : {400.0, 937.0, 1100.0, 1e5}) {
    const BoundParams b = bound_params(L);
    const double t = std::sqrt(L) - 3 * std::log2(L);
    CHECK(b.t.lo <= t + 1e-12);
    CHECK(b.t.hi >= t - 1e-12);
    CHECK(b.t.hi - b.t.lo <= 1e-12 * std::max(1.0, std::abs(t)));
  }
}

TEST_CASE("trivial region boundary") {
  CHECK(trivial_region_sign(900) == 1);
  CHECK(trivial_region_sign(1024) == -1);
  const RootBracket r = trivial_region_boundary();
  CHECK(r.lo > 900);
  CHECK(r.hi < 1024);
  CHECK(r.hi - r.lo <= 1e-6);
  // root of 1 + 3 log2 L - sqrt(L) computed separately at 40 digits
  constexpr double kRoot = 937.4490204572748713;
  CHECK(r.lo <= kRoot);
  CHECK(r.hi >= kRoot);
  CHECK(trivial_region_sign(r.lo) == 1);
  CHECK(trivial_region_sign(r.hi) == -1);
}

TEST_CASE("induction chain at the diameter threshold") {
  // log2(f(n) - f(n-D)) from a separate 60-digit evaluation
  const std::pair<double, double> expected[] = {
      {1100, 0.983836810057391}, {1600, 0.985799216774238}, {2000, 0.986933236727254},
      {1e4, 0.993395842758389},  {1e6, 0.999284719299573}};
  for (auto [L, slack] : expected) {
    const ChainReport r = check_induction_chain(L);
    CHECK(r.in_regime);
    CHECK(r.all_hold());
    CHECK(r.steps.size() == 8);
    CHECK(r.end_to_end.holds);
    CHECK(r.end_to_end.slack.lo == doctest::Approx(slack).epsilon(1e-9));
    CHECK(r.end_to_end.slack.hi - r.end_to_end.slack.lo < 1e-12);
    // the intermediate 2^x <= 1 + x step holds for 0 <= x <= 1 with slack near 1 - ln 2
    CHECK(r.steps[5].slack.lo == doctest::Approx(1 - std::log(2.0)).epsilon(1e-6));
    // equality case of the 4/sqrt(log n) step
    CHECK(r.steps[6].slack.lo == 0.0);
  }
}

TEST_CASE("chain outside the threshold") {
  // a path shorter than the threshold removes too little
  const ChainReport short_path = check_induction_chain(1600, 2.0);
  CHECK_FALSE(short_path.steps[1].holds);
  CHECK_FALSE(short_path.end_to_end.holds);

  // D = 0: nothing is deleted, so f(n-D) = f(n) and the claim fails
  const ChainReport none = check_induction_chain(1600, std::numeric_limits<double>::infinity());
  CHECK_FALSE(none.end_to_end.holds);
  CHECK_FALSE(none.steps[1].holds);
  CHECK(none.steps[7].holds);

  const ChainReport small = check_induction_chain(300);
  CHECK_FALSE(small.in_regime);
  CHECK_THROWS_AS(check_induction_chain(10), std::invalid_argument);
}

TEST_CASE("2^x <= 1 + x on the unit interval") {
  for (int i = 1; i <= 1000; ++i) {
    const double x = i / 1000.0;
    CHECK(std::exp2(x) <= 1 + x + 1e-15);
  }
  CHECK(std::exp2(1.5) > 2.5);
}
