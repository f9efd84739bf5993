#pragma once

// Gradient-stream generators and brute-force oracles for the property tests.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the C++
// standard. Raw 64-bit outputs are mapped to doubles by hand ((x >> 11) * 2^-53) so
// streams do not depend on the standard library's distribution implementations.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfolo/core.hpp"

namespace pfolo {

enum class AdversaryKind {
  constant,
  alternating,
  growing,
  spike,
  seeded_uniform,
  seeded_signs,
  zero,
  adaptive_sign,
};

inline constexpr AdversaryKind kAllAdversaryKinds[] = {
    AdversaryKind::constant,       AdversaryKind::alternating,  AdversaryKind::growing,
    AdversaryKind::spike,          AdversaryKind::seeded_uniform, AdversaryKind::seeded_signs,
    AdversaryKind::zero,           AdversaryKind::adaptive_sign,
};

inline std::string_view to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::constant: return "constant";
    case AdversaryKind::alternating: return "alternating";
    case AdversaryKind::growing: return "growing";
    case AdversaryKind::spike: return "spike";
    case AdversaryKind::seeded_uniform: return "seeded_uniform";
    case AdversaryKind::seeded_signs: return "seeded_signs";
    case AdversaryKind::zero: return "zero";
    case AdversaryKind::adaptive_sign: return "adaptive_sign";
  }
  return "?";
}

inline AdversaryKind parse_adversary_kind(std::string_view name) {
  for (AdversaryKind k : kAllAdversaryKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown adversary '" + std::string(name) + "'");
}

struct AdversaryConfig {
  AdversaryKind kind = AdversaryKind::constant;
  double scale = 1.0;
  std::size_t dim = 1;
  std::uint64_t seed = 1;
  double rate = 0.5;          // growing: ‖g_t‖ = scale t^rate
  std::size_t period = 100;   // spike: every period-th round
  double magnitude = 10.0;    // spike: ‖g‖ = magnitude * scale on spike rounds

  void validate() const {
    if (!(scale > 0.0)) throw std::invalid_argument("adversary: scale must be positive");
    if (dim == 0) throw std::invalid_argument("adversary: dimension must be >= 1");
    if (kind == AdversaryKind::spike && period == 0) {
      throw std::invalid_argument("adversary: spike period must be >= 1");
    }
    if (kind == AdversaryKind::growing && !(rate >= 0.0)) {
      throw std::invalid_argument("adversary: growth rate must be >= 0");
    }
  }
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniformly distributed unit vector (Box-Muller normals, normalized).
inline Vector random_unit_vector(std::mt19937_64& rng, std::size_t dim) {
  Vector v(dim);
  double n = 0.0;
  while (n == 0.0) {
    for (double& x : v) {
      const double u1 = 1.0 - unit_uniform(rng);  // (0, 1]
      const double u2 = unit_uniform(rng);
      x = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    n = dual_norm(v);
  }
  for (double& x : v) x /= n;
  return v;
}

class Adversary {
 public:
  explicit Adversary(AdversaryConfig config) : config_(config), rng_(config.seed) {
    config_.validate();
  }

  std::size_t dim() const { return config_.dim; }
  const AdversaryConfig& config() const { return config_; }

  /// Gradient for round t (t >= 1) after the learner has played w.
  Gradient next(std::size_t t, const Point& w) {
    const std::size_t d = config_.dim;
    const double s = config_.scale;
    Gradient g(d, 0.0);
    switch (config_.kind) {
      case AdversaryKind::constant:
        g[0] = s;
        break;
      case AdversaryKind::alternating:
        g[0] = (t % 2 == 0) ? s : -s;
        break;
      case AdversaryKind::growing:
        g[0] = s * std::pow(static_cast<double>(t), config_.rate);
        break;
      case AdversaryKind::spike:
        g[0] = (t % config_.period == 0) ? config_.magnitude * s : s;
        break;
      case AdversaryKind::seeded_uniform: {
        const double per = d == 1 ? s : s / std::sqrt(static_cast<double>(d));
        for (double& x : g) x = per * (2.0 * unit_uniform(rng_) - 1.0);
        break;
      }
      case AdversaryKind::seeded_signs: {
        const double per = d == 1 ? s : s / std::sqrt(static_cast<double>(d));
        for (double& x : g) x = (rng_() >> 63) ? per : -per;
        break;
      }
      case AdversaryKind::zero:
        break;
      case AdversaryKind::adaptive_sign:
        g[0] = (w.empty() || w[0] >= 0.0) ? s : -s;
        break;
    }
    return g;
  }

  /// Declared bound on ‖g_t‖ for this kind.
  double envelope(std::size_t t) const {
    switch (config_.kind) {
      case AdversaryKind::growing:
        return config_.scale * std::pow(static_cast<double>(t), config_.rate);
      case AdversaryKind::spike:
        return config_.scale * std::max(1.0, config_.magnitude);
      default:
        return config_.scale;
    }
  }

 private:
  AdversaryConfig config_;
  std::mt19937_64 rng_;
};

/// Replays a recorded stream, optionally multiplied by a constant.
class ReplayAdversary {
 public:
  explicit ReplayAdversary(std::vector<Gradient> stream, double factor = 1.0)
      : stream_(std::move(stream)), factor_(factor) {
    if (stream_.empty()) throw std::invalid_argument("ReplayAdversary: empty stream");
  }
  std::size_t dim() const { return stream_.front().size(); }
  Gradient next(std::size_t t, const Point&) {
    if (t == 0 || t > stream_.size()) throw std::out_of_range("ReplayAdversary: stream exhausted");
    Gradient g = stream_[t - 1];
    for (double& x : g) x *= factor_;
    return g;
  }

 private:
  std::vector<Gradient> stream_;
  double factor_;
};

/// Grid argmin over [-1/(2h), 1/(2h)] (step <= 1e-4, 0 on the grid) of Σ_t -ln(1 - g_t v).
/// Ties go to the smallest |v|.
inline double best_betting_fraction(std::span<const double> grads, double final_hint,
                                    double resolution = 1e-4) {
  if (!(final_hint > 0.0)) throw std::invalid_argument("best_betting_fraction: hint must be positive");
  const double half = 1.0 / (2.0 * final_hint);
  const auto m = static_cast<long>(std::ceil(half / resolution));
  const double step = half / static_cast<double>(m);
  double best_v = 0.0;
  double best_loss = std::numeric_limits<double>::infinity();
  // walk outward from 0 so equal losses keep the smaller |v|
  for (long j = 0; j <= m; ++j) {
    for (int sgn : {1, -1}) {
      if (j == 0 && sgn == -1) continue;
      const double v = j == m ? sgn * half : sgn * static_cast<double>(j) * step;
      double loss = 0.0;
      for (double g : grads) loss -= std::log1p(-g * v);
      if (loss < best_loss) {
        best_loss = loss;
        best_v = v;
      }
    }
  }
  return best_v;
}

inline constexpr double kComparatorMagnitudes[] = {0.1, 1.0, 10.0, 100.0};

/// Standard comparator set: 0 and ±{0.1, 1, 10, 100} along e₁ in 1-D; in d > 1 those
/// magnitudes along ±grad_sum/‖grad_sum‖ (e₁ when the sum vanishes) and along four
/// seeded random unit directions.
inline std::vector<Point> comparator_sweep(const RegretLedger& ledger, std::uint64_t seed = 1) {
  const std::size_t d = ledger.dim();
  std::vector<Point> out;
  out.emplace_back(d, 0.0);
  auto push_along = [&](const Vector& dir) {
    for (double m : kComparatorMagnitudes) {
      for (double sgn : {1.0, -1.0}) {
        Point c(dir);
        for (double& x : c) x *= sgn * m;
        out.push_back(std::move(c));
      }
    }
  };
  Vector axis(d, 0.0);
  const double n = dual_norm(ledger.grad_sum());
  if (n > 0.0) {
    axis = ledger.grad_sum();
    for (double& x : axis) x /= n;
  } else {
    axis[0] = 1.0;
  }
  push_along(axis);
  if (d > 1) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 4; ++i) {
      const Vector u = random_unit_vector(rng, d);
      for (double m : kComparatorMagnitudes) {
        Point c(u);
        for (double& x : c) x *= m;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace pfolo
