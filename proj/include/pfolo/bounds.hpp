#pragma once

// Closed-form regret upper bounds, evaluated on the statistics of an observed stream.
// Each evaluator transcribes one displayed bound; compositions are built on top.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "pfolo/core.hpp"
#include "pfolo/unit_ball.hpp"

namespace pfolo {

struct BoundParams {
  double epsilon = 1.0;
  double alpha = 1.0;
  double k = 1.0;
  double p = 0.5;
  double g0 = 1.0;
  std::vector<double> q_grid{0.0, 1.0 / 3.0, 0.5, 1.0};

  void validate() const {
    if (!(epsilon > 0.0) || !(alpha > 0.0) || !(k > 0.0) || !(g0 > 0.0)) {
      throw std::invalid_argument("BoundParams: epsilon, alpha, k and g0 must be positive");
    }
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("BoundParams: p must lie in (0, 1]");
    if (q_grid.empty()) throw std::invalid_argument("BoundParams: q grid is empty");
    for (double q : q_grid) {
      if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("BoundParams: q must lie in [0, 1]");
    }
  }
};

struct StreamStats {
  std::size_t rounds = 0;
  double sum_sq = 0.0;     // Σ g_t²
  double sum_abs = 0.0;    // Σ |g_t|
  double max_abs = 0.0;    // G
  double final_hint = 0.0; // h_T
  double max_ratio = 0.0;  // max_t Σ_{i<=t} |g_i| / G_t  (over rounds with G_t > 0)

  /// From gradient magnitudes, with h_T = max(g0, G) as produced by hint fabrication.
  static StreamStats from_magnitudes(std::span<const double> mags, double g0) {
    StreamStats s;
    for (double m : mags) {
      const double a = std::abs(m);
      ++s.rounds;
      s.sum_sq += a * a;
      s.sum_abs += a;
      s.max_abs = std::max(s.max_abs, a);
      if (s.max_abs > 0.0) s.max_ratio = std::max(s.max_ratio, s.sum_abs / s.max_abs);
    }
    s.final_hint = std::max(g0, s.max_abs);
    return s;
  }

  static StreamStats from_ledger(const RegretLedger& ledger, double g0) {
    std::vector<double> mags;
    mags.reserve(ledger.size());
    for (const auto& r : ledger.rounds()) mags.push_back(dual_norm(r.grad));
    return from_magnitudes(mags, g0);
  }

  /// For games with externally supplied hints: h_T is the hint in force at the last round.
  static StreamStats from_hinted_ledger(const RegretLedger& ledger) {
    StreamStats s = from_ledger(ledger, 0.0);
    s.final_hint = ledger.empty() ? 0.0 : ledger.rounds().back().hint_before;
    return s;
  }
};

namespace detail {

// ln(e^x + 1) without overflow.
inline double log1p_exp(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double log_or_neg_inf(double x) {
  return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

// 2 sqrt(S ln(4 S^10 e^{shift} w² / ε² + 1)), evaluated in log space.
inline double sqrt_log_arm(double sum_sq, double shift, double w_abs, double epsilon) {
  if (sum_sq == 0.0) return 0.0;
  const double log_arg = std::log(4.0) + 10.0 * std::log(sum_sq) + shift +
                         2.0 * std::log(w_abs) - 2.0 * std::log(epsilon);
  return 2.0 * std::sqrt(sum_sq * log1p_exp(log_arg));
}

// ln(16 |w| h e^{α/4h²} (1 + S/α)^{4.5} / ε)
inline double log_wealth_arg(const BoundParams& bp, const StreamStats& st, double w_abs) {
  const double h = st.final_hint;
  return std::log(16.0 * w_abs * h / bp.epsilon) + bp.alpha / (4.0 * h * h) +
         4.5 * std::log1p(st.sum_sq / bp.alpha);
}

}  // namespace detail

/// Regret of the hinted bettor against |ẘ| = w_abs.
inline double thm1_bound(const BoundParams& bp, const StreamStats& st, double w_abs) {
  if (w_abs == 0.0) return bp.epsilon;
  const double h = st.final_hint;
  const double arm1 = 8.0 * h * (detail::log_wealth_arg(bp, st, w_abs) - 1.0);
  const double arm2 = detail::sqrt_log_arm(st.sum_sq, bp.alpha / (2.0 * h * h), w_abs, bp.epsilon);
  return bp.epsilon + w_abs * std::max(arm1, arm2);
}

/// The inner-learner term as restated inside the Leashed composition (before doubling).
inline double cor1_inner_bound(const BoundParams& bp, const StreamStats& st, double w_abs) {
  if (w_abs == 0.0) return bp.epsilon;
  const double h = st.final_hint;
  const double arm1 = 8.0 * h * detail::log_wealth_arg(bp, st, w_abs) - h;
  const double arm2 = detail::sqrt_log_arm(st.sum_sq, bp.alpha / (4.0 * h * h), w_abs, bp.epsilon);
  return bp.epsilon + w_abs * std::max(arm1, arm2);
}

/// min over the q grid of G |ẘ|^{1+(1-q)/p} / k^{(1-q)/p} (Σ|g| / G)^q.
inline double comparator_penalty(const BoundParams& bp, const StreamStats& st, double w_abs) {
  if (st.max_abs == 0.0 || w_abs == 0.0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (double q : bp.q_grid) {
    const double e = (1.0 - q) / bp.p;
    const double term = st.max_abs * std::pow(w_abs, 1.0 + e) / std::pow(bp.k, e) *
                        std::pow(st.sum_abs / st.max_abs, q);
    best = std::min(best, term);
  }
  return best;
}

/// Everything the leash adds on top of twice the inner regret.
inline double leash_terms(const BoundParams& bp, const StreamStats& st, double w_abs) {
  if (st.max_abs == 0.0) return 0.0;
  const double G = st.max_abs;
  return G * bp.k * std::pow(st.max_ratio, bp.p) + 2.0 * G * w_abs +
         comparator_penalty(bp, st, w_abs);
}

/// Leashed regret given any valid inner regret bound.
inline double thm3_bound(const BoundParams& bp, const StreamStats& st, double w_abs,
                         double inner_bound) {
  return 2.0 * inner_bound + leash_terms(bp, st, w_abs);
}

/// Leashed over the bettor, fully expanded.
inline double cor1_bound(const BoundParams& bp, const StreamStats& st, double w_abs) {
  return thm3_bound(bp, st, w_abs, cor1_inner_bound(bp, st, w_abs));
}

/// Hint fabrication by truncation: inner regret at h_T = max(g0, G) plus G (max‖w_t‖ + ‖ẘ‖).
inline double thm2_bound(const BoundParams& bp, const StreamStats& st, double w_abs,
                         double max_played) {
  return thm1_bound(bp, st, w_abs) + st.max_abs * (max_played + w_abs);
}

/// Truncation composed with the constant barrier D.
inline double fixed_diameter_bound(const BoundParams& bp, const StreamStats& st, double w_abs,
                                   double diameter) {
  return 2.0 * thm1_bound(bp, st, w_abs) + st.max_abs * (diameter + w_abs) +
         std::max(0.0, w_abs - diameter) * st.sum_abs;
}

/// Dimension-free composition: Leashed on the scalar stream ⟨g_t, y_t⟩ plus ‖ẘ‖ times the
/// unit-ball regret.
inline double dimfree_bound(const BoundParams& bp, const StreamStats& scalar_stats, double w_norm,
                            double grad_sum_sq) {
  return cor1_bound(bp, scalar_stats, w_norm) + w_norm * ball_regret_bound(grad_sum_sq);
}

/// Upper bound on the Fenchel conjugate of f(x) = a exp(b x² / (|x| + c)):
/// |θ| max((2/b)(ln(2|θ|/(ab)) - 1), sqrt((c/b) ln(cθ²/(a²b) + 1))).
inline double fenchel_bound(double a, double b, double c, double theta) {
  if (!(a > 0.0) || !(b > 0.0) || !(c >= 0.0)) {
    throw std::invalid_argument("fenchel_bound: requires a, b > 0 and c >= 0");
  }
  if (theta == 0.0) return 0.0;
  const double t = std::abs(theta);
  const double arm1 = (2.0 / b) * (std::log(2.0 * t / (a * b)) - 1.0);
  const double arm2 = std::sqrt((c / b) * std::log1p(c * t * t / (a * a * b)));
  return t * std::max(arm1, arm2);
}

enum class SimplifiedSetting {
  half_zero,    // p = 1/2, q = 0
  third_third,  // p = q = 1/3
};

/// Order-of-growth forms with every hidden constant set to 1. Not upper bounds.
inline double simplified_bound(SimplifiedSetting setting, const StreamStats& st, double w_abs,
                               double k) {
  const double G = st.max_abs;
  const double T = static_cast<double>(st.rounds);
  const double w3 = w_abs * w_abs * w_abs;
  switch (setting) {
    case SimplifiedSetting::half_zero:
      return (w_abs + k) * G * std::sqrt(T) + G * w3 / (k * k);
    case SimplifiedSetting::third_third:
      return w_abs * G * std::sqrt(T) + G * w_abs + (w3 / (k * k) + k) * G * std::cbrt(T);
  }
  return 0.0;
}

}  // namespace pfolo
