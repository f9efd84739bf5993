#pragma once

// One-dimensional coin betting with hints. The betting fraction is learned by an
// Online Newton Step over the shrinking intervals [-1/(2h_t), 1/(2h_t)] on the
// exp-concave losses v -> -ln(1 - g_t v).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfolo/core.hpp"

namespace pfolo {

struct OnsParams {
  double epsilon = 1.0;  // initial wealth
  double alpha = 1.0;    // ONS regularizer
};

/// 2 / (2 - ln 3): the inverse of the exp-concavity constant used for the ONS step.
inline const double kOnsStepScale = 2.0 / (2.0 - std::log(3.0));

class OnsBettor {
 public:
  using value_type = double;

  OnsBettor(double epsilon, double alpha, double initial_hint)
      : epsilon_(epsilon), alpha_(alpha), log_wealth_(std::log(epsilon)),
        accumulator_(4.0 * alpha), hint_(initial_hint) {
    if (!(epsilon > 0.0) || !(alpha > 0.0) || !(initial_hint > 0.0)) {
      throw std::invalid_argument("OnsBettor: epsilon, alpha and the initial hint must be positive");
    }
  }
  OnsBettor(OnsParams params, double initial_hint)
      : OnsBettor(params.epsilon, params.alpha, initial_hint) {}

  /// Bet w_t = v_t * Wealth_{t-1}. Overflows to ±inf once the wealth leaves the double range.
  double predict() const noexcept { return fraction_ == 0.0 ? 0.0 : fraction_ * wealth(); }

  /// Absorbs g_t (|g_t| <= current hint) and the hint for the next round.
  void update(double g, double next_hint) {
    if (!(std::abs(g) <= hint_)) {
      throw std::invalid_argument("OnsBettor: |g| = " + std::to_string(std::abs(g)) +
                                  " exceeds the hint " + std::to_string(hint_));
    }
    if (!(next_hint >= hint_)) {
      throw std::invalid_argument("OnsBettor: hints must be nondecreasing");
    }
    // Wealth_t = Wealth_{t-1} (1 - g v_t); the factor lies in [1/2, 3/2] under the hint contract
    log_wealth_ += std::log1p(-g * fraction_);
    // derivative of -ln(1 - g v) at the fraction used this round
    const double z = g / (1.0 - g * fraction_);
    accumulator_ += z * z;
    const double cap = 1.0 / (2.0 * next_hint);
    fraction_ = std::max(std::min(fraction_ - kOnsStepScale * z / accumulator_, cap), -cap);
    hint_ = next_hint;
    ++rounds_;
  }

  double epsilon() const { return epsilon_; }
  double alpha() const { return alpha_; }
  double wealth() const { return std::exp(log_wealth_); }
  double log_wealth() const { return log_wealth_; }
  double fraction() const { return fraction_; }
  double accumulator() const { return accumulator_; }
  double hint() const { return hint_; }
  std::size_t rounds() const { return rounds_; }

  Probe probe() const { return {hint_, std::nullopt, wealth()}; }

 private:
  double epsilon_;
  double alpha_;
  double log_wealth_;  // wealth is kept in log space; it grows geometrically on easy streams
  double fraction_ = 0.0;
  double accumulator_;
  double hint_;
  std::size_t rounds_ = 0;
};

/// Regret of the bettor through the identity Σ g_t w_t = ε - Wealth_T. Stays meaningful when the
/// plays themselves have overflowed: returns -inf once Wealth_T exceeds the double range.
inline double bettor_regret(const OnsBettor& bettor, double grad_sum, double comparator) {
  return bettor.epsilon() - bettor.wealth() - comparator * grad_sum;
}

struct BettingRound {
  double fraction;
  double grad;
  double z;
};

/// Per-round (v_t, g_t, z_t) of the inner betting-fraction game.
class BettingLossTrace {
 public:
  void record(double fraction, double grad) {
    rounds_.push_back({fraction, grad, grad / (1.0 - grad * fraction)});
  }
  std::span<const BettingRound> rounds() const { return rounds_; }
  std::size_t size() const { return rounds_.size(); }
  bool empty() const { return rounds_.empty(); }

  std::vector<double> grads() const {
    std::vector<double> out;
    out.reserve(rounds_.size());
    for (const auto& r : rounds_) out.push_back(r.grad);
    return out;
  }

 private:
  std::vector<BettingRound> rounds_;
};

/// Σ_t [-ln(1 - g_t v_t) + ln(1 - g_t v_ref)].
inline double ons_inner_regret(const BettingLossTrace& trace, double v_ref) {
  double total = 0.0;
  for (const auto& r : trace.rounds()) {
    if (!(1.0 - r.grad * v_ref > 0.0)) {
      throw std::invalid_argument("ons_inner_regret: reference fraction outside the loss domain");
    }
    total += -std::log1p(-r.grad * r.fraction) + std::log1p(-r.grad * v_ref);
  }
  return total;
}

/// Regret bound of ONS on the shrinking intervals: α/(4h_T²) + 4.5 ln((α + Σg²)/α).
inline double ons_regret_bound(double alpha, double final_hint, double sum_g_sq) {
  return alpha / (4.0 * final_hint * final_hint) + 4.5 * std::log1p(sum_g_sq / alpha);
}

}  // namespace pfolo
