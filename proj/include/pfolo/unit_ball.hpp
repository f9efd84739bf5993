#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pfolo/core.hpp"

namespace pfolo {

/// Euclidean projection onto the closed unit ball. The result satisfies ‖x‖ <= 1 exactly.
inline void project_unit_ball(Vector& x) {
  const double n = dual_norm(x);
  if (n <= 1.0) return;
  for (double& v : x) v /= n;
  // rounding can leave the norm one ulp above 1
  while (dual_norm(x) > 1.0) {
    for (double& v : x) v *= std::nextafter(1.0, 0.0);
  }
}

/// Adaptive projected gradient descent on the unit ball with η_t = λ / sqrt(Σ_{i<=t} ‖g_i‖²).
class AdaGradBall {
 public:
  using value_type = Vector;

  explicit AdaGradBall(std::size_t dim, double lambda = std::numbers::sqrt2)
      : w_(dim, 0.0), lambda_(lambda) {
    if (dim == 0) throw std::invalid_argument("AdaGradBall: dimension must be >= 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("AdaGradBall: lambda must be positive");
  }

  std::size_t dim() const { return w_.size(); }
  const Vector& predict() const { return w_; }

  void update(const Vector& g) {
    if (g.size() != w_.size()) {
      throw std::invalid_argument("AdaGradBall: gradient has dimension " +
                                  std::to_string(g.size()) + ", expected " +
                                  std::to_string(w_.size()));
    }
    const double n = dual_norm(g);
    sum_sq_ += n * n;
    if (sum_sq_ == 0.0) return;  // nothing observed yet: stay put
    const double eta = lambda_ / std::sqrt(sum_sq_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] -= eta * g[i];
    project_unit_ball(w_);
  }

  double sum_sq() const { return sum_sq_; }
  double lambda() const { return lambda_; }

 private:
  Vector w_;
  double sum_sq_ = 0.0;
  double lambda_;
};

/// 2^{3/2} sqrt(Σ‖g_t‖²), the regret bound against any comparator in the unit ball.
inline double ball_regret_bound(double sum_sq) { return 2.0 * std::numbers::sqrt2 * std::sqrt(sum_sq); }

}  // namespace pfolo
