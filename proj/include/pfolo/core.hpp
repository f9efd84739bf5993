#pragma once

// Learner/adversary concepts, the online game loop and regret accounting.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace pfolo {

using Vector = std::vector<double>;
using Point = Vector;
using Gradient = Vector;

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// Euclidean norm. In a Hilbert space the dual norm coincides with the primal one.
inline double dual_norm(std::span<const double> g) {
  double acc = 0.0;
  for (double x : g) acc += x * x;
  return std::sqrt(acc);
}

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Vector& x) { return dual_norm(x); }

inline bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

/// Optional per-round diagnostics a learner may expose (used for traces).
struct Probe {
  std::optional<double> hint;
  std::optional<double> barrier;
  std::optional<double> wealth;
};

// A learner plays points of `value_type` (double for 1-D learners, Vector otherwise)
// and is charged a linear loss through `update`.
template <class L>
concept OnlineLearner = requires(L l, const L cl, const typename L::value_type& g) {
  typename L::value_type;
  { cl.predict() } -> std::convertible_to<typename L::value_type>;
  l.update(g);
};

// Same protocol, except every loss arrives together with the hint for the next round.
template <class L>
concept HintedLearner = requires(L l, const L cl, const typename L::value_type& g, double h) {
  typename L::value_type;
  { cl.predict() } -> std::convertible_to<typename L::value_type>;
  { cl.hint() } -> std::convertible_to<double>;
  l.update(g, h);
};

template <class L>
concept ScalarLearner = std::same_as<typename L::value_type, double>;

template <class L>
concept Probed = requires(const L l) {
  { l.probe() } -> std::convertible_to<Probe>;
};

template <class A>
concept GradientSource = requires(A a, const A ca, std::size_t t, const Point& w) {
  { ca.dim() } -> std::convertible_to<std::size_t>;
  { a.next(t, w) } -> std::convertible_to<Gradient>;
};

// A source that can announce, before round t, an upper bound on ‖g_t‖.
template <class A>
concept EnvelopedSource = GradientSource<A> && requires(const A a, std::size_t t) {
  { a.envelope(t) } -> std::convertible_to<double>;
};

template <class L>
std::size_t learner_dim(const L& learner) {
  if constexpr (std::same_as<typename L::value_type, double>) {
    return 1;
  } else {
    return learner.dim();
  }
}

template <class L>
Probe probe_of(const L& learner) {
  if constexpr (Probed<L>) {
    return learner.probe();
  } else {
    return {};
  }
}

inline Point as_point(double x) { return Point{x}; }
inline Point as_point(const Vector& x) { return x; }

struct RoundRecord {
  std::size_t t = 0;
  Point played;
  Gradient grad;
  double hint_before = 0.0;
};

/// Summary statistics of a ledger; recomputable from the round list.
struct LedgerSummary {
  double cum_loss = 0.0;
  Gradient grad_sum;
  double sum_norm = 0.0;
  double sum_sq = 0.0;
  double max_norm = 0.0;
  double max_played_norm = 0.0;

  void absorb(const RoundRecord& r) {
    cum_loss += dot(r.grad, r.played);
    for (std::size_t i = 0; i < grad_sum.size(); ++i) grad_sum[i] += r.grad[i];
    const double n = dual_norm(r.grad);
    sum_norm += n;
    sum_sq += n * n;
    max_norm = std::max(max_norm, n);
    max_played_norm = std::max(max_played_norm, dual_norm(r.played));
  }
};

class RegretLedger {
 public:
  explicit RegretLedger(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("RegretLedger: dimension must be >= 1");
    summary_.grad_sum.assign(dim, 0.0);
  }

  void append(RoundRecord r) {
    if (r.played.size() != dim_ || r.grad.size() != dim_) {
      throw std::invalid_argument("RegretLedger: round " + std::to_string(r.t) +
                                  " has the wrong dimension");
    }
    if (!rounds_.empty() && r.t <= rounds_.back().t) {
      throw std::invalid_argument("RegretLedger: round indices must increase");
    }
    summary_.absorb(r);
    rounds_.push_back(std::move(r));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rounds_.size(); }
  bool empty() const { return rounds_.empty(); }
  std::span<const RoundRecord> rounds() const { return rounds_; }

  double cum_loss() const { return summary_.cum_loss; }
  const Gradient& grad_sum() const { return summary_.grad_sum; }
  double sum_norm() const { return summary_.sum_norm; }
  double sum_sq() const { return summary_.sum_sq; }
  double max_norm() const { return summary_.max_norm; }
  double max_played_norm() const { return summary_.max_played_norm; }
  const LedgerSummary& summary() const { return summary_; }

  /// Σ_t ⟨g_t, w_t − comparator⟩.
  double regret(std::span<const double> comparator) const {
    if (comparator.size() != dim_) {
      throw std::invalid_argument("regret: comparator has dimension " +
                                  std::to_string(comparator.size()) + ", ledger has " +
                                  std::to_string(dim_));
    }
    return summary_.cum_loss - dot(summary_.grad_sum, comparator);
  }
  double regret(double comparator) const { return regret(std::span<const double>(&comparator, 1)); }

  LedgerSummary recompute() const {
    LedgerSummary s;
    s.grad_sum.assign(dim_, 0.0);
    for (const auto& r : rounds_) s.absorb(r);
    return s;
  }

 private:
  std::size_t dim_;
  std::vector<RoundRecord> rounds_;
  LedgerSummary summary_;
};

/// What an observer sees after each round.
struct RoundView {
  const RoundRecord& record;
  const Probe& before;  // learner diagnostics when the point was played
  const Probe& after;   // diagnostics once the gradient was absorbed
};

struct NoObserver {
  void operator()(const RoundView&) const {}
};

namespace detail {

template <class L>
typename L::value_type to_learner_grad(const Gradient& g) {
  if constexpr (std::same_as<typename L::value_type, double>) {
    return g[0];
  } else {
    return g;
  }
}

template <class L, class A>
void check_game(const L& learner, const A& adversary, std::size_t T) {
  if (T == 0) throw std::invalid_argument("run_game: T must be >= 1");
  if (learner_dim(learner) != adversary.dim()) {
    throw std::invalid_argument("run_game: learner dimension " +
                                std::to_string(learner_dim(learner)) +
                                " does not match adversary dimension " +
                                std::to_string(adversary.dim()));
  }
}

inline void check_finite(const Point& w, const Gradient& g, std::size_t t) {
  if (!all_finite(w)) {
    throw std::runtime_error("round " + std::to_string(t) + ": learner produced a non-finite point");
  }
  if (!all_finite(g)) {
    throw std::runtime_error("round " + std::to_string(t) +
                             ": adversary produced a non-finite gradient");
  }
}

}  // namespace detail

/// Plays T rounds of online linear optimization and returns the completed ledger.
template <OnlineLearner L, GradientSource A, class Observer = NoObserver>
RegretLedger run_game(L& learner, A& adversary, std::size_t T, Observer&& observer = {}) {
  detail::check_game(learner, adversary, T);
  RegretLedger ledger(adversary.dim());
  for (std::size_t t = 1; t <= T; ++t) {
    const Probe before = probe_of(learner);
    Point w = as_point(learner.predict());
    if (!all_finite(w)) detail::check_finite(w, {}, t);
    Gradient g = adversary.next(t, w);
    detail::check_finite(w, g, t);
    if (g.size() != ledger.dim()) {
      throw std::runtime_error("round " + std::to_string(t) + ": gradient has the wrong dimension");
    }
    learner.update(detail::to_learner_grad<L>(g));
    ledger.append({t, std::move(w), std::move(g), before.hint.value_or(0.0)});
    const Probe after = probe_of(learner);
    observer(RoundView{ledger.rounds().back(), before, after});
  }
  return ledger;
}

/// Game for 1-D hint-consuming learners: the hint for round t+1 is the adversary's
/// announced envelope, kept nondecreasing. The learner must already hold a hint
/// covering round 1.
template <HintedLearner L, EnvelopedSource A, class Observer = NoObserver>
  requires ScalarLearner<L>
RegretLedger run_hinted_game(L& learner, A& adversary, std::size_t T, Observer&& observer = {}) {
  detail::check_game(learner, adversary, T);
  RegretLedger ledger(1);
  for (std::size_t t = 1; t <= T; ++t) {
    const Probe before = probe_of(learner);
    const double hint = learner.hint();
    Point w{learner.predict()};
    Gradient g = adversary.next(t, w);
    detail::check_finite(w, g, t);
    const double next_hint = std::max(hint, adversary.envelope(t + 1));
    learner.update(g[0], next_hint);
    ledger.append({t, std::move(w), std::move(g), hint});
    const Probe after = probe_of(learner);
    observer(RoundView{ledger.rounds().back(), before, after});
  }
  return ledger;
}

}  // namespace pfolo
