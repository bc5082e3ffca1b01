#include "pursuit/bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pursuit {

namespace {

void widen_exponent_range() {
  static const bool done = [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    return true;
  }();
  (void)done;
}

/// Closed interval with MPFR endpoints; every operation rounds outward.
class Ival {
 public:
  explicit Ival(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Ival(double x, mpfr_prec_t prec) : Ival(prec) {
    mpfr_set_d(lo_, x, MPFR_RNDD);
    mpfr_set_d(hi_, x, MPFR_RNDU);
  }
  Ival(const Ival& o) : Ival(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Ival& operator=(const Ival& o) {
    if (this != &o) {
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  static Ival ln2(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
  }

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0 && !mpfr_nan_p(lo_); }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  Enclosure enclosure() const { return {mpfr_get_d(lo_, MPFR_RNDD), mpfr_get_d(hi_, MPFR_RNDU)}; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Ival increasing(const Ival& a, Unary f) {
  Ival r(a.prec());
  f(r.lo(), a.lo(), MPFR_RNDD);
  f(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Ival operator+(const Ival& a, const Ival& b) {
  Ival r(a.prec());
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Ival operator-(const Ival& a) {
  Ival r(a.prec());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

Ival operator-(const Ival& a, const Ival& b) {
  Ival r(a.prec());
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Hull of f over the four endpoint pairs; valid for * and / when the result
// is monotone in each argument over the box.
Ival corners(const Ival& a, const Ival& b, Binary f) {
  Ival r(a.prec());
  mpfr_t t;
  mpfr_init2(t, a.prec());
  bool first = true;
  for (mpfr_srcptr x : {a.lo(), a.hi()}) {
    for (mpfr_srcptr y : {b.lo(), b.hi()}) {
      f(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo(), t, MPFR_RNDD);
      f(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Ival operator*(const Ival& a, const Ival& b) { return corners(a, b, mpfr_mul); }

Ival operator/(const Ival& a, const Ival& b) {
  if (!b.certainly_positive() && !b.certainly_negative())
    throw std::domain_error("interval division by an interval containing zero");
  return corners(a, b, mpfr_div);
}

Ival scalar(double x, mpfr_prec_t prec) { return Ival(x, prec); }

Ival sqrt(const Ival& a) { return increasing(a, mpfr_sqrt); }
Ival log2(const Ival& a) { return increasing(a, mpfr_log2); }
Ival log1p(const Ival& a) { return increasing(a, mpfr_log1p); }
Ival exp2(const Ival& a) { return increasing(a, mpfr_exp2); }
Ival expm1(const Ival& a) { return increasing(a, mpfr_expm1); }

void require_precision(int precision) {
  if (precision < 64) throw std::invalid_argument("bounds: precision must be at least 64 bits");
  widen_exponent_range();
}

Ival trivial_h(double L, mpfr_prec_t prec) {
  const Ival l(L, prec);
  return scalar(1, prec) + scalar(3, prec) * log2(l) - sqrt(l);
}

ChainStep make_step(std::string name, bool strict, const Ival& slack, std::string scale) {
  ChainStep s;
  s.name = std::move(name);
  s.strict = strict;
  s.holds = strict ? slack.certainly_positive() : slack.certainly_nonnegative();
  s.slack = slack.enclosure();
  s.scale = std::move(scale);
  return s;
}

ChainStep make_step(std::string name, bool strict, Enclosure slack, std::string scale) {
  ChainStep s;
  s.name = std::move(name);
  s.strict = strict;
  s.holds = strict ? slack.lo > 0 : slack.lo >= 0;
  s.slack = slack;
  s.scale = std::move(scale);
  return s;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* kStepNames[] = {
    "f(n-D) <= 2(n-D)(log n)^3 2^-sqrt(log(n-D))",
    "2(n-D)(log n)^3 2^-sqrt(log(n-D)) <= 2n(log n)^3 2^-sqrt(log(n-D)) - 2",
    "D <= 2^-20 n",
    "log(n-D) >= log n - 2D/n",
    "sqrt(log n - 2D/n) >= sqrt(log n) - 2D/(n sqrt(log n))",
    "2^(2D/(n sqrt(log n))) <= 1 + 2D/(n sqrt(log n))",
    "f(n)(1 + 2D/(n sqrt(log n))) - 2 <= f(n) + 4/sqrt(log n) - 2",
    "f(n) + 4/sqrt(log n) - 2 < f(n) - 1",
};
constexpr const char* kEndToEnd = "f(n-D) < f(n) - 1";

}  // namespace

BoundParams bound_params(double L, int precision) {
  if (!(L > 0) || !std::isfinite(L)) throw std::invalid_argument("bound_params: L must be positive");
  require_precision(precision);
  const mpfr_prec_t p = precision;
  const Ival l(L, p);
  const Ival sq = sqrt(l);
  const Ival lg = log2(l);
  const Ival three(3, p);
  BoundParams out;
  out.L = L;
  out.precision = precision;
  out.sqrt_L = sq.enclosure();
  out.log2_L = lg.enclosure();
  const Ival t = sq - three * lg;
  out.t = t.enclosure();
  out.threshold_log = t.enclosure();
  out.threshold = exp2(t).enclosure();
  const Ival p_log = scalar(2, p) * lg - sq;
  out.p_log = p_log.enclosure();
  out.p = exp2(p_log).enclosure();
  out.mu_log = (l + p_log).enclosure();
  out.total_cops_log = (l + three * lg - sq).enclosure();
  out.f_log = (scalar(1, p) + l + three * lg - sq).enclosure();
  return out;
}

int trivial_region_sign(double L, int precision) {
  if (!(L > 0)) throw std::invalid_argument("trivial_region_sign: L must be positive");
  require_precision(precision);
  const Ival h = trivial_h(L, precision);
  if (h.certainly_positive()) return 1;
  if (h.certainly_negative()) return -1;
  return 0;
}

RootBracket trivial_region_boundary(double tolerance, int precision) {
  if (!(tolerance > 0)) throw std::invalid_argument("trivial_region_boundary: tolerance must be positive");
  RootBracket b{900.0, 1024.0, 0};
  if (trivial_region_sign(b.lo, precision) != 1 || trivial_region_sign(b.hi, precision) != -1)
    throw std::logic_error("trivial_region_boundary: initial bracket is not certified");
  while (b.hi - b.lo > tolerance) {
    const double mid = b.lo / 2 + b.hi / 2;
    if (mid <= b.lo || mid >= b.hi) break;
    const int s = trivial_region_sign(mid, precision);
    if (s == 0) break;
    (s > 0 ? b.lo : b.hi) = mid;
    ++b.iterations;
  }
  return b;
}

bool ChainReport::all_hold() const {
  for (const ChainStep& s : steps)
    if (!s.holds) return false;
  return end_to_end.holds;
}

ChainReport check_induction_chain(double L, double gap, int precision) {
  if (!(L > 20) || !std::isfinite(L)) throw std::invalid_argument("check_induction_chain: L must exceed 20");
  if (std::isnan(gap) || gap == -kInf) throw std::invalid_argument("check_induction_chain: gap must be a number or +inf");
  require_precision(precision);
  const mpfr_prec_t p = precision;
  ChainReport r;
  r.L = L;
  r.gap = gap;
  r.precision = precision;
  r.in_regime = L >= 400 && gap >= 0;

  const Ival l(L, p);
  const Ival sq = sqrt(l);
  const Ival lg = log2(l);
  const Ival one(1, p), two(2, p), three(3, p), four(4, p);
  const Ival ln2 = Ival::ln2(p);
  const Ival f_log = one + l + three * lg - sq;
  const std::string rel_delta = "divided by D/n";

  if (gap == kInf) {
    // D = 0: both sides of the middle steps coincide.
    r.D_log = {-kInf, -kInf};
    const Enclosure zero{0, 0};
    r.steps.push_back(make_step(kStepNames[0], false, zero, "absolute"));
    r.steps.push_back(make_step(kStepNames[1], false, Enclosure{-kInf, -kInf}, "log2 of the two sides' ratio"));
    r.steps.push_back(make_step(kStepNames[2], false, Enclosure{kInf, kInf}, "log2"));
    r.steps.push_back(make_step(kStepNames[3], false, zero, "absolute"));
    r.steps.push_back(make_step(kStepNames[4], false, zero, "absolute"));
    r.steps.push_back(make_step(kStepNames[5], false, zero, "absolute"));
    r.steps.push_back(make_step(kStepNames[6], false, (four / sq).enclosure(), "absolute"));
    r.steps.push_back(make_step(kStepNames[7], true, one - four / sq, "absolute"));
    r.end_to_end = make_step(kEndToEnd, true, Enclosure{-kInf, -kInf}, "log2(f(n) - f(n-D))");
    return r;
  }

  const Ival g(gap, p);
  const Ival d_log = sq - three * lg - g;
  r.D_log = d_log.enclosure();
  const Ival delta = exp2(d_log - l);                // D/n
  const Ival eps = -log1p(-delta) / ln2;             // log n - log(n-D)
  const Ival root_gap = eps / (sq + sqrt(l - eps));  // sqrt(log n) - sqrt(log(n-D))

  r.steps.push_back(make_step(kStepNames[0], false, eps, "log n - log(n-D)"));
  r.steps.push_back(make_step(kStepNames[1], false, root_gap - g, "log2 of the two sides' ratio"));
  r.steps.push_back(make_step(kStepNames[2], false, l - scalar(20, p) - d_log, "log2"));
  r.steps.push_back(make_step(kStepNames[3], false, two - eps / delta, rel_delta));
  r.steps.push_back(make_step(kStepNames[4], false, two / sq - two / (sq + sqrt(l - two * delta)), rel_delta));
  const Ival x = two * delta / sq;
  r.steps.push_back(
      make_step(kStepNames[5], false, one - expm1(x * ln2) / x, "divided by x = 2D/(n sqrt(log n))"));
  r.steps.push_back(make_step(kStepNames[6], false, four / sq * -expm1(-g * ln2), "absolute"));
  r.steps.push_back(make_step(kStepNames[7], true, one - four / sq, "absolute"));

  // log(f(n-D)/f(n)) in nats, then f(n) - f(n-D) = f(n) (1 - e^ratio).
  const Ival ratio = log1p(-delta) + three * log1p(-eps / l) + ln2 * root_gap;
  const Ival drop = -expm1(ratio);
  if (drop.certainly_positive()) {
    r.end_to_end = make_step(kEndToEnd, true, f_log + log2(drop), "log2(f(n) - f(n-D))");
  } else {
    Enclosure e{-kInf, drop.enclosure().hi > 0 ? (f_log + log2(drop)).enclosure().hi : -kInf};
    r.end_to_end = make_step(kEndToEnd, true, e, "log2(f(n) - f(n-D))");
  }
  return r;
}

}  // namespace pursuit
