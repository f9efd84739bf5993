#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "pfolo/acceptance.hpp"
#include "pfolo/adversaries.hpp"
#include "pfolo/coin_betting.hpp"

using namespace pfolo;

namespace {

// Straight-line transcription of the bettor kept separate from the library: plain wealth,
// explicit step constant, and a configurable clip half-width (cap_scale / h).
class ReferenceBettor {
 public:
  ReferenceBettor(double eps, double alpha, double h1, double cap_scale = 0.5)
      : wealth_(eps), a_(4.0 * alpha), h_(h1), cap_scale_(cap_scale) {}

  double predict() const { return v_ * wealth_; }
  double fraction() const { return v_; }
  double hint() const { return h_; }
  double log_wealth() const { return std::log(wealth_); }
  double wealth() const { return wealth_; }
  double accumulator() const { return a_; }

  void update(double g, double h_next) {
    const double w = v_ * wealth_;
    wealth_ -= g * w;
    const double z = g / (1.0 - g * v_);
    a_ += z * z;
    const double step = 2.0 / (2.0 - std::log(3.0));
    double v = v_ - step * z / a_;
    const double cap = cap_scale_ / h_next;
    if (v > cap) v = cap;
    if (v < -cap) v = -cap;
    v_ = v;
    h_ = h_next;
  }

 private:
  double wealth_;
  double v_ = 0.0;
  double a_;
  double h_;
  double cap_scale_;
};

// Clip range widened to [-1/h, 1/h].
class WideClipBettor : public ReferenceBettor {
 public:
  WideClipBettor(double eps, double alpha, double h1) : ReferenceBettor(eps, alpha, h1, 1.0) {}
};

}  // namespace

TEST(Bettor, InitialState) {
  OnsBettor b(1.0, 1.0, 1.0);
  EXPECT_EQ(b.wealth(), 1.0);
  EXPECT_EQ(b.fraction(), 0.0);
  EXPECT_EQ(b.accumulator(), 4.0);
  EXPECT_EQ(b.predict(), 0.0);

  OnsBettor c(1.0, 10.0, 0.5);
  EXPECT_EQ(c.accumulator(), 40.0);
  EXPECT_EQ(1.0 / (2.0 * c.hint()), 1.0);
}

TEST(Bettor, RejectsNonPositiveParameters) {
  EXPECT_THROW(OnsBettor(0.0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(OnsBettor(1.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(OnsBettor(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Bettor, RejectsHintViolations) {
  OnsBettor b(1.0, 1.0, 1.0);
  EXPECT_THROW(b.update(1.5, 2.0), std::invalid_argument);
  EXPECT_THROW(b.update(0.5, 0.5), std::invalid_argument);
}

TEST(Bettor, ZeroGradientLeavesStateUnchanged) {
  OnsBettor b(2.0, 1.0, 1.0);
  b.update(0.5, 1.0);
  const double wealth = b.wealth(), v = b.fraction(), a = b.accumulator();
  b.update(0.0, 1.0);
  EXPECT_EQ(b.wealth(), wealth);
  EXPECT_EQ(b.fraction(), v);
  EXPECT_EQ(b.accumulator(), a);
}

TEST(Bettor, FirstUpdateMatchesHandComputation) {
  const double step = 2.0 / (2.0 - std::log(3.0));
  OnsBettor b(1.0, 1.0, 1.0);
  b.update(1.0, 1.0);
  EXPECT_EQ(b.wealth(), 1.0);
  EXPECT_EQ(b.accumulator(), 5.0);
  EXPECT_NEAR(b.fraction(), -step / 5.0, 1e-15);
  EXPECT_NEAR(b.fraction(), -0.44376, 1e-5);

  OnsBettor c(1.0, 1.0, 1.0);
  c.update(1.0, 10.0);
  EXPECT_EQ(c.fraction(), -0.05);
}

TEST(Bettor, PredictIsFractionTimesWealth) {
  OnsBettor b(2.0, 1.0, 1.0);
  b.update(-1.0, 1.0);  // v > 0, wealth stays 2 because the first bet is 0
  EXPECT_EQ(b.wealth(), 2.0);
  EXPECT_DOUBLE_EQ(b.predict(), b.fraction() * 2.0);
}

TEST(Bettor, MatchesReferenceTranscription) {
  for (AdversaryKind kind : kAllAdversaryKinds) {
    Adversary adv({.kind = kind, .seed = 11});
    OnsBettor lib(1.0, 1.0, adv.envelope(1));
    ReferenceBettor ref(1.0, 1.0, adv.envelope(1));
    for (std::size_t t = 1; t <= 300; ++t) {
      ASSERT_NEAR(lib.predict(), ref.predict(), 1e-9 * (1.0 + std::abs(ref.predict())))
          << to_string(kind) << " round " << t;
      const double g = adv.next(t, Point{lib.predict()})[0];
      const double h = std::max(lib.hint(), adv.envelope(t + 1));
      lib.update(g, h);
      ref.update(g, h);
      ASSERT_NEAR(lib.fraction(), ref.fraction(), 1e-12);
      ASSERT_NEAR(lib.accumulator(), ref.accumulator(), 1e-9 * ref.accumulator());
    }
  }
}

TEST(Bettor, WealthRegretIdentity) {
  for (AdversaryKind kind : {AdversaryKind::alternating, AdversaryKind::seeded_uniform,
                             AdversaryKind::seeded_signs, AdversaryKind::spike}) {
    Adversary adv({.kind = kind, .seed = 2});
    OnsBettor b(1.0, 1.0, adv.envelope(1));
    double loss = 0.0;
    for (std::size_t t = 1; t <= 2000; ++t) {
      const double w = b.predict();
      const double g = adv.next(t, Point{w})[0];
      loss += g * w;
      b.update(g, std::max(b.hint(), adv.envelope(t + 1)));
    }
    ASSERT_TRUE(std::isfinite(b.wealth()));
    EXPECT_NEAR(1.0 - loss, b.wealth(), 1e-9 * b.wealth()) << to_string(kind);
    EXPECT_NEAR(bettor_regret(b, 0.0, 0.0), loss, 1e-9 * b.wealth());
  }
}

TEST(Bettor, InvariantsOnRandomValidStreams) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    double h = 0.1 + 5.0 * unit_uniform(rng);
    OnsBettor b(1.0, 0.5 + unit_uniform(rng), h);
    double prev_a = b.accumulator();
    for (int t = 0; t < 5000; ++t) {
      const double g = h * (2.0 * unit_uniform(rng) - 1.0);
      const double factor = 1.0 - b.fraction() * g;
      EXPECT_GE(factor, 0.5);
      EXPECT_LE(factor, 1.5);
      const double h_next = unit_uniform(rng) < 0.01 ? h * (1.0 + unit_uniform(rng)) : h;
      b.update(g, h_next);
      h = h_next;
      EXPECT_LE(std::abs(b.fraction()), 1.0 / (2.0 * h));
      EXPECT_GE(b.accumulator(), prev_a);
      EXPECT_GT(b.wealth(), 0.0);
      prev_a = b.accumulator();
    }
  }
}

TEST(InnerRegret, Examples) {
  BettingLossTrace empty;
  EXPECT_EQ(ons_inner_regret(empty, 0.3), 0.0);

  BettingLossTrace one;
  one.record(0.2, 0.7);
  EXPECT_DOUBLE_EQ(ons_inner_regret(one, 0.2), 0.0);

  BettingLossTrace first;
  first.record(0.0, 1.0);
  EXPECT_NEAR(ons_inner_regret(first, 0.25), std::log(0.75), 1e-15);
  EXPECT_NEAR(ons_inner_regret(first, 0.25), -0.28768, 1e-5);
  EXPECT_THROW(ons_inner_regret(first, 1.0), std::invalid_argument);
  EXPECT_DOUBLE_EQ(first.rounds()[0].z, 1.0);
}

TEST(InnerRegret, BoundExamples) {
  EXPECT_DOUBLE_EQ(ons_regret_bound(1.0, 1.0, 0.0), 0.25);
  EXPECT_NEAR(ons_regret_bound(1.0, 1.0, std::exp(1.0) - 1.0), 4.75, 1e-12);
  EXPECT_DOUBLE_EQ(ons_regret_bound(4.0, 2.0, 0.0), 0.25);
}

TEST(Acceptance, ClipCheckPassesOnLibraryAndReference) {
  EXPECT_TRUE(acceptance::check_wealth_and_clip<OnsBettor>(2000).passed);
  EXPECT_TRUE(acceptance::check_wealth_and_clip<ReferenceBettor>(2000).passed);
}

TEST(Acceptance, ClipCheckCatchesWidenedClip) {
  const auto r = acceptance::check_wealth_and_clip<WideClipBettor>(2000);
  EXPECT_FALSE(r.passed);
  EXPECT_GT(r.measured, 1.0);
}
