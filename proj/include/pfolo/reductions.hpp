#pragma once

// Wrappers that turn the hint-consuming bettor into a fully parameter-free learner:
//   Hintless  - fabricates hints from past gradients and truncates surprises;
//   Leashed   - additionally confines plays to a data-dependent interval [-B_t, B_t];
//   DimFree   - lifts a 1-D learner to R^d with a unit-ball direction learner.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "pfolo/coin_betting.hpp"
#include "pfolo/core.hpp"
#include "pfolo/unit_ball.hpp"

namespace pfolo {

/// Rescales g to magnitude h when ‖g‖ >= h.
inline double truncate(double g, double h) {
  return std::abs(g) >= h ? std::copysign(h, g) : g;
}

inline Gradient truncate(const Gradient& g, double h) {
  const double n = dual_norm(g);
  if (n < h) return g;
  Gradient out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h * (g[i] / n);
  while (dual_norm(out) > h) {
    for (double& x : out) x *= std::nextafter(1.0, 0.0);
  }
  return out;
}

/// Projection onto [-B, B] with sign(0) := 0.
inline double leash_project(double w, double barrier) {
  if (std::abs(w) < barrier) return w;
  if (w == 0.0) return 0.0;
  return std::copysign(barrier, w);
}

/// ½(g w + |g| max(0, |w| - B)).
inline double surrogate_loss(double g_trunc, double w, double barrier) {
  return 0.5 * (g_trunc * w + std::abs(g_trunc) * std::max(0.0, std::abs(w) - barrier));
}

/// Subgradient of surrogate_loss at w. At the kink |w| = B the hinge contributes 0.
inline double surrogate_grad(double g_trunc, double w, double barrier) {
  if (std::abs(w) > barrier && w != 0.0) {
    return 0.5 * (g_trunc + std::copysign(std::abs(g_trunc), w));
  }
  return 0.5 * g_trunc;
}

/// Algorithm-without-hints wrapper: hints are h_t = max(g0, max_{i<t} ‖g_i‖), where g0 is the
/// inner learner's initial hint.
template <HintedLearner Inner>
class Hintless {
 public:
  using value_type = typename Inner::value_type;

  explicit Hintless(Inner inner) : inner_(std::move(inner)), hint_(inner_.hint()) {
    if (!(hint_ > 0.0)) throw std::invalid_argument("Hintless: initial hint must be positive");
    if constexpr (std::same_as<value_type, double>) {
      last_truncated_ = 0.0;
    }
  }

  std::size_t dim() const { return learner_dim(inner_); }
  value_type predict() const { return inner_.predict(); }

  void update(const value_type& g) {
    last_truncated_ = truncate(g, hint_);
    hint_ = std::max(hint_, magnitude(g));
    inner_.update(last_truncated_, hint_);
  }

  double hint() const { return hint_; }
  const value_type& last_truncated() const { return last_truncated_; }
  const Inner& inner() const { return inner_; }

  Probe probe() const {
    Probe p = probe_of(inner_);
    p.hint = hint_;
    return p;
  }

 private:
  Inner inner_;
  double hint_;
  value_type last_truncated_{};
};

/// B_{t+1} = k (Σ_{i<=t} |g_i| / G_t)^p, and 0 while every gradient has been zero.
struct PowerBarrier {
  double k = 1.0;
  double p = 0.5;

  void validate() const {
    if (!(k > 0.0)) throw std::invalid_argument("PowerBarrier: k must be positive");
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("PowerBarrier: p must lie in (0, 1]");
  }
  double initial() const { return 0.0; }
  double next(double sum_abs, double max_abs) const {
    if (max_abs == 0.0) return 0.0;
    return k * std::pow(sum_abs / max_abs, p);
  }
};

/// Fixed radius D for every round (bounded-diameter setting).
struct ConstantBarrier {
  double radius = 1.0;

  void validate() const {
    if (!(radius > 0.0)) throw std::invalid_argument("ConstantBarrier: D must be positive");
  }
  double initial() const { return radius; }
  double next(double, double) const { return radius; }
};

struct LeashParams {
  double k = 1.0;
  double p = 0.5;
  double g0 = 1.0;  // initial hint
};

/// Leashed reduction over a 1-D hint-consuming learner. Plays the inner proposal projected
/// onto [-B_t, B_t] and feeds back the surrogate subgradient of the truncated loss.
template <HintedLearner Inner, class Barrier = PowerBarrier>
  requires ScalarLearner<Inner>
class Leashed {
 public:
  using value_type = double;

  Leashed(Inner inner, Barrier barrier)
      : inner_(std::move(inner)), rule_(barrier), hint_(inner_.hint()), barrier_(rule_.initial()) {
    rule_.validate();
    if (!(hint_ > 0.0)) throw std::invalid_argument("Leashed: initial hint must be positive");
  }

  double predict() const { return leash_project(inner_.predict(), barrier_); }

  void update(double g) {
    const double proposed = inner_.predict();
    const double a = std::abs(g);
    max_abs_ = std::max(max_abs_, a);
    sum_abs_ += a;
    const double hint_now = hint_;
    hint_ = std::max(hint_, a);
    last_truncated_ = truncate(g, hint_now);
    last_surrogate_ = surrogate_grad(last_truncated_, proposed, barrier_);
    barrier_ = rule_.next(sum_abs_, max_abs_);
    inner_.update(last_surrogate_, hint_);
  }

  double barrier() const { return barrier_; }
  double hint() const { return hint_; }
  double max_abs() const { return max_abs_; }
  double sum_abs() const { return sum_abs_; }
  double last_truncated() const { return last_truncated_; }
  double last_surrogate() const { return last_surrogate_; }
  const Inner& inner() const { return inner_; }
  const Barrier& rule() const { return rule_; }

  Probe probe() const {
    Probe p = probe_of(inner_);
    p.hint = hint_;
    p.barrier = barrier_;
    return p;
  }

 private:
  Inner inner_;
  Barrier rule_;
  double hint_;
  double max_abs_ = 0.0;
  double sum_abs_ = 0.0;
  double barrier_;
  double last_truncated_ = 0.0;
  double last_surrogate_ = 0.0;
};

template <class Inner>
using FixedDiameter = Leashed<Inner, ConstantBarrier>;

template <HintedLearner Inner>
  requires ScalarLearner<Inner>
FixedDiameter<Inner> fixed_diameter_wrap(Inner inner, double diameter) {
  return FixedDiameter<Inner>(std::move(inner), ConstantBarrier{diameter});
}

using LeashedBettor = Leashed<OnsBettor>;
using FixedDiameterBettor = FixedDiameter<OnsBettor>;

inline LeashedBettor make_leashed(LeashParams lp = {}, OnsParams op = {}) {
  return LeashedBettor(OnsBettor(op, lp.g0), PowerBarrier{lp.k, lp.p});
}

inline FixedDiameterBettor make_fixed_diameter(double diameter, double g0 = 1.0, OnsParams op = {}) {
  return fixed_diameter_wrap(OnsBettor(op, g0), diameter);
}

inline Hintless<OnsBettor> make_hintless(double g0 = 1.0, OnsParams op = {}) {
  return Hintless<OnsBettor>(OnsBettor(op, g0));
}

/// w_t = x_t y_t with x_t from a 1-D learner and y_t from a unit-ball learner.
template <OnlineLearner OneD, OnlineLearner Ball>
  requires ScalarLearner<OneD> && std::same_as<typename Ball::value_type, Vector>
class DimFree {
 public:
  using value_type = Vector;

  DimFree(OneD one_d, Ball ball) : one_d_(std::move(one_d)), ball_(std::move(ball)) {}

  std::size_t dim() const { return ball_.dim(); }

  Vector predict() const {
    const double x = one_d_.predict();
    Vector w = ball_.predict();
    for (double& c : w) c *= x;
    return w;
  }

  void update(const Vector& g) {
    if (g.size() != dim()) {
      throw std::invalid_argument("DimFree: gradient has dimension " + std::to_string(g.size()) +
                                  ", expected " + std::to_string(dim()));
    }
    last_scalar_ = dot(g, ball_.predict());
    ball_.update(g);
    one_d_.update(last_scalar_);
  }

  double last_scalar() const { return last_scalar_; }
  const OneD& one_d() const { return one_d_; }
  const Ball& ball() const { return ball_; }

  Probe probe() const { return probe_of(one_d_); }

 private:
  OneD one_d_;
  Ball ball_;
  double last_scalar_ = 0.0;
};

using DimFreeLeashed = DimFree<LeashedBettor, AdaGradBall>;

inline DimFreeLeashed make_dimfree(std::size_t dim, LeashParams lp = {}, OnsParams op = {}) {
  return DimFreeLeashed(make_leashed(lp, op), AdaGradBall(dim));
}

}  // namespace pfolo
