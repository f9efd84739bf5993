#pragma once

// Acceptance criteria as executable checks. Each check plays the relevant stack against
// the relevant adversaries and compares what it measures with a fixed threshold; nothing
// here is tuned after the fact.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pfolo/adversaries.hpp"
#include "pfolo/bounds.hpp"
#include "pfolo/coin_betting.hpp"
#include "pfolo/core.hpp"
#include "pfolo/reductions.hpp"
#include "pfolo/unit_ball.hpp"

namespace pfolo::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double required = 0.0;
  std::string detail;
  double seconds = 0.0;
};

enum class Suite { all, coin, reductions, ball, bounds };

inline Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "coin") return Suite::coin;
  if (name == "reductions") return Suite::reductions;
  if (name == "ball") return Suite::ball;
  if (name == "bounds") return Suite::bounds;
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected all, coin, reductions, ball or bounds)");
}

/// 0, ±0.1, ±1, ±10, ±100.
inline constexpr double kScalarComparators[] = {0.0, 0.1, -0.1, 1.0, -1.0, 10.0, -10.0, 100.0, -100.0};

inline std::string format_line(const CriterionResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] C%-2d %-44s measured=%-12.6g required=%-10.6g %.2fs",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.measured, r.required,
                r.seconds);
  std::string line(buf);
  if (!r.detail.empty()) line += "  (" + r.detail + ")";
  return line;
}

inline CriterionResult named(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// The bettor driven directly with the adversary's announced envelopes as hints.
struct HintedRun {
  BettingLossTrace trace;
  double cum_loss = 0.0;   // Σ g_t w_t accumulated from the plays
  bool plays_finite = true;
  double grad_sum = 0.0;
  double sum_sq = 0.0;
  double final_hint = 0.0;  // hint in force at round T
  OnsBettor bettor{1.0, 1.0, 1.0};
};

inline HintedRun hinted_run(AdversaryKind kind, std::size_t T, std::uint64_t seed = 1) {
  Adversary adv({.kind = kind, .seed = seed});
  HintedRun run;
  run.bettor = OnsBettor(1.0, 1.0, adv.envelope(1));
  for (std::size_t t = 1; t <= T; ++t) {
    const double w = run.bettor.predict();
    const double g = adv.next(t, Point{w})[0];
    run.final_hint = run.bettor.hint();
    run.trace.record(run.bettor.fraction(), g);
    if (!std::isfinite(w)) run.plays_finite = false;
    run.cum_loss += g * w;
    run.grad_sum += g;
    run.sum_sq += g * g;
    run.bettor.update(g, std::max(run.bettor.hint(), adv.envelope(t + 1)));
  }
  return run;
}

}  // namespace detail

/// Wealth stays positive, every wealth factor 1 - v_t g_t lies in [1/2, 3/2], and the
/// betting fraction stays inside [-1/(2h_t), 1/(2h_t)].
template <class Bettor = OnsBettor>
CriterionResult check_wealth_and_clip(std::size_t T = 10000) {
  detail::Stopwatch clock;
  auto r = named(1, "wealth positivity & clip containment");
  std::size_t clip_violations = 0;
  std::size_t wealth_violations = 0;
  double worst_clip = 0.0;
  double min_factor = std::numeric_limits<double>::infinity();
  double max_factor = 0.0;
  for (AdversaryKind kind : kAllAdversaryKinds) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Adversary adv({.kind = kind, .seed = seed});
      Bettor bettor(1.0, 1.0, adv.envelope(1));
      for (std::size_t t = 1; t <= T; ++t) {
        const double v = bettor.fraction();
        const double g = adv.next(t, Point{bettor.predict()})[0];
        const double factor = 1.0 - v * g;
        min_factor = std::min(min_factor, factor);
        max_factor = std::max(max_factor, factor);
        bettor.update(g, std::max(bettor.hint(), adv.envelope(t + 1)));
        const double lw = bettor.log_wealth();
        if (std::isnan(lw) || lw == -std::numeric_limits<double>::infinity()) ++wealth_violations;
        const double h = bettor.hint();
        const double v_next = bettor.fraction();
        if (!(std::abs(v_next) <= 1.0 / (2.0 * h))) ++clip_violations;
        worst_clip = std::max(worst_clip, 2.0 * h * std::abs(v_next));
      }
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst_clip;
  r.required = 1.0;
  const bool factors_ok = min_factor >= 0.5 && max_factor <= 1.5;
  r.passed = clip_violations == 0 && wealth_violations == 0 && factors_ok && r.seconds < 5.0;
  r.detail = "max 2h|v|; clip violations=" + std::to_string(clip_violations) +
             ", nonpositive wealth=" + std::to_string(wealth_violations) + ", factor range [" +
             detail::num(min_factor) + ", " + detail::num(max_factor) + "], limit 5s";
  return r;
}

/// Hinted bettor regret against thm1_bound.
inline CriterionResult check_thm1_oracle() {
  detail::Stopwatch clock;
  auto r = named(2, "hinted bettor regret bound");
  BoundParams bp;
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  std::size_t via_identity = 0;
  for (AdversaryKind kind : {AdversaryKind::constant, AdversaryKind::alternating,
                             AdversaryKind::seeded_uniform}) {
    for (std::size_t T : {100u, 1000u, 10000u}) {
      const auto run = detail::hinted_run(kind, T);
      StreamStats st;
      st.rounds = T;
      st.sum_sq = run.sum_sq;
      st.final_hint = run.final_hint;
      if (!run.plays_finite) ++via_identity;
      for (double c : kScalarComparators) {
        // plays beyond the double range: fall back to the exact wealth identity
        const double regret = run.plays_finite ? run.cum_loss - c * run.grad_sum
                                               : bettor_regret(run.bettor, run.grad_sum, c);
        const double bound = thm1_bound(bp, st, std::abs(c));
        if (!(regret <= bound)) ++violations;
        worst = std::max(worst, regret / bound);
      }
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = 1.0;
  r.passed = violations == 0;
  r.detail = "max regret/bound over 9 streams x 9 comparators; violations=" +
             std::to_string(violations) + ", streams scored via wealth identity=" +
             std::to_string(via_identity);
  return r;
}

/// Inner betting-fraction regret against the grid-searched best fraction.
inline CriterionResult check_inner_ons_oracle() {
  detail::Stopwatch clock;
  auto r = named(3, "inner ONS oracle (grid best fraction)");
  constexpr double kGridSlack = 1e-3;
  double worst_gap = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  for (AdversaryKind kind : {AdversaryKind::constant, AdversaryKind::alternating,
                             AdversaryKind::seeded_uniform}) {
    for (std::size_t T : {100u, 1000u, 10000u}) {
      const auto run = detail::hinted_run(kind, T);
      const auto grads = run.trace.grads();
      const double v_star = best_betting_fraction(grads, run.final_hint);
      const double regret = ons_inner_regret(run.trace, v_star);
      const double bound = ons_regret_bound(1.0, run.final_hint, run.sum_sq) + kGridSlack;
      if (!(regret <= bound)) ++violations;
      worst_gap = std::max(worst_gap, regret - bound);
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst_gap;
  r.required = 0.0;
  r.passed = violations == 0;
  r.detail = "max (regret - bound - 1e-3) over 9 streams; violations=" + std::to_string(violations);
  return r;
}

/// Σ_t (g_t - g_trunc_t)(w_t - ẘ) <= G (max|w_t| + |ẘ|), checked at every horizon whose plays
/// are representable.
inline CriterionResult check_truncation_decomposition(std::size_t T = 10000) {
  detail::Stopwatch clock;
  auto r = named(4, "truncation penalty decomposition");
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  std::size_t checks = 0;
  std::string overflow_note;
  for (AdversaryKind kind : {AdversaryKind::spike, AdversaryKind::growing}) {
    Adversary adv({.kind = kind});
    auto learner = make_hintless();
    std::vector<double> extra(std::size(kScalarComparators), 0.0);
    double G = 0.0;
    double max_w = 0.0;
    std::size_t finite_until = T;
    for (std::size_t t = 1; t <= T; ++t) {
      const double w = learner.predict();
      const double g = adv.next(t, Point{w})[0];
      learner.update(g);
      if (!std::isfinite(w)) {
        finite_until = t - 1;
        break;
      }
      const double gt = learner.last_truncated();
      G = std::max(G, std::abs(g));
      max_w = std::max(max_w, std::abs(w));
      for (std::size_t i = 0; i < extra.size(); ++i) {
        const double c = kScalarComparators[i];
        if (g != gt) extra[i] += (g - gt) * (w - c);
        const double rhs = G * (max_w + std::abs(c));
        ++checks;
        if (!(extra[i] <= rhs)) ++violations;
        if (rhs > 0.0) worst = std::max(worst, extra[i] / rhs);
      }
    }
    if (finite_until < T) {
      overflow_note += std::string(to_string(kind)) + " plays overflow after round " +
                       std::to_string(finite_until) + "; ";
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = 1.0;
  r.passed = violations == 0;
  r.detail = overflow_note + std::to_string(checks) + " prefix checks, violations=" +
             std::to_string(violations);
  return r;
}

/// Full Leashed stack against cor1_bound.
inline CriterionResult check_cor1_end_to_end() {
  detail::Stopwatch clock;
  auto r = named(5, "leashed regret bound, end to end");
  BoundParams bp;  // k=1, p=1/2, eps=1, alpha=1, g0=1
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  for (AdversaryKind kind : kAllAdversaryKinds) {
    for (std::size_t T : {1000u, 10000u}) {
      auto learner = make_leashed({bp.k, bp.p, bp.g0}, {bp.epsilon, bp.alpha});
      Adversary adv({.kind = kind});
      const auto ledger = run_game(learner, adv, T);
      const auto st = StreamStats::from_ledger(ledger, bp.g0);
      for (double c : kScalarComparators) {
        const double regret = ledger.regret(c);
        const double bound = cor1_bound(bp, st, std::abs(c));
        if (!(regret <= bound)) ++violations;
        worst = std::max(worst, regret / bound);
      }
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = 1.0;
  r.passed = violations == 0 && r.seconds < 30.0;
  r.detail = "max regret/bound over 8 adversaries x 2 horizons x 9 comparators; violations=" +
             std::to_string(violations) + ", limit 30s";
  return r;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

/// Growth exponent of max(R_T, 1): regret that never rises above one unit counts as flat.
inline double regret_growth_exponent(const std::vector<double>& horizons,
                                     const std::vector<double>& regrets) {
  std::vector<double> ys;
  ys.reserve(regrets.size());
  for (double v : regrets) ys.push_back(std::max(v, 1.0));
  return loglog_slope(horizons, ys);
}

inline CriterionResult check_sublinearity() {
  detail::Stopwatch clock;
  auto r = named(6, "sublinear regret (constant adversary, |w|=1)");
  constexpr double kComparator = 1.0;
  std::vector<double> horizons, regrets;
  bool inside_barrier = true;
  for (std::size_t T : {100u, 1000u, 10000u, 100000u}) {
    auto learner = make_leashed();
    Adversary adv({.kind = AdversaryKind::constant});
    const auto ledger = run_game(learner, adv, T);
    horizons.push_back(static_cast<double>(T));
    regrets.push_back(ledger.regret(kComparator));
    if (!(std::abs(kComparator) <= learner.barrier())) inside_barrier = false;
  }
  const double rate_small = regrets[0] / horizons[0];
  const double rate_large = regrets[2] / horizons[2];
  const double slope = regret_growth_exponent(horizons, regrets);
  r.seconds = clock.seconds();
  r.measured = slope;
  r.required = 0.55;
  r.passed = rate_large < rate_small && slope <= 0.55 && inside_barrier;
  r.detail = "growth exponent of max(R_T,1); R_T/T at 1e2=" + detail::num(rate_small) +
             ", at 1e4=" + detail::num(rate_large) + "; R_T at 1e2..1e5 = " +
             detail::num(regrets[0]) + ", " + detail::num(regrets[1]) + ", " +
             detail::num(regrets[2]) + ", " + detail::num(regrets[3]) +
             (inside_barrier ? "" : "; comparator outside final barrier");
  return r;
}

inline CriterionResult check_unit_ball_bound(std::size_t T = 10000) {
  detail::Stopwatch clock;
  auto r = named(7, "unit-ball AdaGrad bound");
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  std::size_t checks = 0;
  std::mt19937_64 rng(7);
  for (std::size_t d : {1u, 2u, 10u}) {
    for (AdversaryKind kind : kAllAdversaryKinds) {
      AdaGradBall learner(d);
      Adversary adv({.kind = kind, .dim = d, .seed = 7});
      const auto ledger = run_game(learner, adv, T);
      const double bound = ball_regret_bound(ledger.sum_sq());
      std::vector<Point> comparators;
      for (int i = 0; i < 20; ++i) comparators.push_back(random_unit_vector(rng, d));
      const double n = dual_norm(ledger.grad_sum());
      if (n > 0.0) {
        Point c = ledger.grad_sum();
        for (double& x : c) x = -x / n;
        project_unit_ball(c);
        comparators.push_back(std::move(c));
      }
      for (const auto& c : comparators) {
        const double regret = ledger.regret(c);
        ++checks;
        if (!(regret <= bound)) ++violations;
        if (bound > 0.0) worst = std::max(worst, regret / bound);
      }
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = 1.0;
  r.passed = violations == 0;
  r.detail = std::to_string(checks) + " (stream, comparator) pairs, d in {1,2,10}; violations=" +
             std::to_string(violations);
  return r;
}

/// Σ⟨g_t, w_t - ẘ⟩ = Σ s_t (x_t - ‖ẘ‖) + ‖ẘ‖ Σ⟨g_t, y_t - ẘ/‖ẘ‖⟩ with s_t = ⟨g_t, y_t⟩.
inline CriterionResult check_dimfree_identity(std::size_t T = 1000) {
  detail::Stopwatch clock;
  auto r = named(8, "dimension-free regret identity");
  constexpr double kTolerance = 1e-9;
  double worst = 0.0;
  std::size_t traces = 0;
  for (std::size_t d : {2u, 10u}) {
    for (AdversaryKind kind : kAllAdversaryKinds) {
      if (kind == AdversaryKind::zero) continue;
      auto learner = make_dimfree(d);
      Adversary adv({.kind = kind, .dim = d, .seed = 8});
      RegretLedger ledger(d);
      std::vector<double> xs, ss;
      std::vector<Vector> ys;
      for (std::size_t t = 1; t <= T; ++t) {
        const double x = learner.one_d().predict();
        Vector y = learner.ball().predict();
        Point w = learner.predict();
        Gradient g = adv.next(t, w);
        learner.update(g);
        xs.push_back(x);
        ss.push_back(learner.last_scalar());
        ys.push_back(std::move(y));
        ledger.append({t, std::move(w), std::move(g), 0.0});
      }
      for (const auto& c : comparator_sweep(ledger, 8)) {
        const double cn = dual_norm(c);
        if (cn == 0.0) continue;
        detail::CompensatedSum lhs, rhs;
        for (std::size_t i = 0; i < T; ++i) {
          const auto& rec = ledger.rounds()[i];
          lhs.add(dot(rec.grad, rec.played));
          lhs.add(-dot(rec.grad, c));
          rhs.add(ss[i] * (xs[i] - cn));
          double inner = 0.0;
          for (std::size_t j = 0; j < d; ++j) inner += rec.grad[j] * (ys[i][j] - c[j] / cn);
          rhs.add(cn * inner);
        }
        worst = std::max(worst, std::abs(lhs.value() - rhs.value()));
      }
      ++traces;
    }
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = kTolerance;
  r.passed = worst <= kTolerance;
  r.detail = "max |lhs - rhs| over " + std::to_string(traces) + " traces (d in {2,10}, T=" +
             std::to_string(T) + ")";
  return r;
}

/// B_t for {g_t} and {1000 g_t} must agree bit for bit. The base stream is snapped to a 2^-24
/// grid first so that multiplying by 1000 and summing are exact in double precision; otherwise
/// the scaled stream would not literally be 1000 times the base one.
inline CriterionResult check_barrier_scale_invariance(std::size_t T = 1000) {
  detail::Stopwatch clock;
  auto r = named(9, "barrier scale invariance (x1000)");
  constexpr double kFactor = 1000.0;
  constexpr double kGrid = 0x1.0p24;
  std::size_t mismatched_streams = 0;
  std::size_t inexact_streams = 0;
  double worst_rel = 0.0;
  for (AdversaryKind kind : kAllAdversaryKinds) {
    auto recorder = make_leashed();
    Adversary adv({.kind = kind});
    const auto ledger = run_game(recorder, adv, T);
    std::vector<Gradient> base;
    double units = 0.0;
    for (const auto& rec : ledger.rounds()) {
      const double q = std::round(rec.grad[0] * kGrid) / kGrid;
      base.push_back({q});
      units += std::abs(q) * kGrid * kFactor;
    }
    if (!(units < 0x1.0p53)) ++inexact_streams;

    auto barrier_trace = [&](double factor) {
      auto learner = make_leashed();
      ReplayAdversary replay(base, factor);
      std::vector<double> trace;
      run_game(learner, replay, T, [&](const RoundView& v) { trace.push_back(*v.after.barrier); });
      return trace;
    };
    const auto b1 = barrier_trace(1.0);
    const auto b2 = barrier_trace(kFactor);
    bool same = b1.size() == b2.size();
    for (std::size_t i = 0; same && i < b1.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(b1[i]) != std::bit_cast<std::uint64_t>(b2[i])) same = false;
    }
    for (std::size_t i = 0; i < std::min(b1.size(), b2.size()); ++i) {
      if (b1[i] != 0.0) worst_rel = std::max(worst_rel, std::abs(b1[i] - b2[i]) / b1[i]);
    }
    if (!same) ++mismatched_streams;
  }
  r.seconds = clock.seconds();
  r.measured = static_cast<double>(mismatched_streams);
  r.required = 0.0;
  r.passed = mismatched_streams == 0 && inexact_streams == 0;
  r.detail = "streams with differing B_t bits; max relative diff=" + detail::num(worst_rel) +
             ", streams too large for exact scaling=" + std::to_string(inexact_streams);
  return r;
}

/// sup_x (θx - f(x)) over a dense grid, f(x) = a exp(b x² / (|x| + c)).
inline double grid_conjugate(double a, double b, double c, double theta, double lo = -100.0,
                             double hi = 100.0, std::size_t points = 2000001) {
  double best = -std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = lo + step * static_cast<double>(i);
    const double ax = std::abs(x);
    const double ratio = ax == 0.0 ? 0.0 : ax * (ax / (ax + c));
    best = std::max(best, theta * x - a * std::exp(b * ratio));
  }
  return best;
}

inline CriterionResult check_conjugate_bound() {
  detail::Stopwatch clock;
  auto r = named(10, "conjugate bound vs grid oracle");
  constexpr double kTolerance = 1e-6;
  std::mt19937_64 rng(10);
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  for (int i = 0; i < 20; ++i) {
    const double a = 0.1 + 9.9 * unit_uniform(rng);
    const double b = 0.1 + 9.9 * unit_uniform(rng);
    const double c = 10.0 * unit_uniform(rng);
    const double theta = 200.0 * unit_uniform(rng) - 100.0;
    const double conj = grid_conjugate(a, b, c, theta);
    const double bound = fenchel_bound(a, b, c, theta);
    if (!(conj <= bound + kTolerance)) ++violations;
    worst = std::max(worst, conj - bound);
  }
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = kTolerance;
  r.passed = violations == 0;
  r.detail = "max (grid conjugate - bound) over 20 seeded (a,b,c,theta); violations=" +
             std::to_string(violations);
  return r;
}

inline CriterionResult check_fixed_diameter(std::size_t T = 10000) {
  detail::Stopwatch clock;
  auto r = named(11, "fixed diameter D=1 (growing adversary)");
  constexpr double kDiameter = 1.0;
  BoundParams bp;
  auto learner = make_fixed_diameter(kDiameter, bp.g0, {bp.epsilon, bp.alpha});
  Adversary adv({.kind = AdversaryKind::growing});
  const auto ledger = run_game(learner, adv, T);
  const auto st = StreamStats::from_ledger(ledger, bp.g0);
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t violations = 0;
  for (double c : {0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0}) {
    const double regret = ledger.regret(c);
    const double bound = fixed_diameter_bound(bp, st, std::abs(c), kDiameter);
    if (!(regret <= bound)) ++violations;
    worst = std::max(worst, regret / bound);
  }
  const bool contained = ledger.max_played_norm() <= kDiameter;
  r.seconds = clock.seconds();
  r.measured = worst;
  r.required = 1.0;
  r.passed = contained && violations == 0;
  r.detail = "max regret/bound for |w| <= 1; max|w_t|=" + detail::num(ledger.max_played_norm()) +
             ", violations=" + std::to_string(violations);
  return r;
}

inline std::vector<CriterionResult> run_suite(Suite suite) {
  std::vector<CriterionResult> out;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::coin) {
    out.push_back(check_wealth_and_clip());
    out.push_back(check_thm1_oracle());
    out.push_back(check_inner_ons_oracle());
  }
  if (all || suite == Suite::reductions) {
    out.push_back(check_truncation_decomposition());
    out.push_back(check_cor1_end_to_end());
    out.push_back(check_sublinearity());
  }
  if (all || suite == Suite::ball) out.push_back(check_unit_ball_bound());
  if (all || suite == Suite::reductions) {
    out.push_back(check_dimfree_identity());
    out.push_back(check_barrier_scale_invariance());
  }
  if (all || suite == Suite::bounds) out.push_back(check_conjugate_bound());
  if (all || suite == Suite::reductions) out.push_back(check_fixed_diameter());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace pfolo::acceptance
