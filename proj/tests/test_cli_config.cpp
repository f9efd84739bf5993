#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "pfolo/cli.hpp"

using namespace pfolo;
using namespace pfolo::cli;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("pfolo_cfg_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Settings, PrecedenceFlagsOverEnvOverFile) {
  const Settings file{{"k", "3"}, {"p", "0.25"}, {"T", "10"}};
  const Settings env{{"k", "2"}, {"T", "20"}};
  const Settings flags{{"k", "1.5"}};
  const auto s = layer_settings(file, env, flags);
  EXPECT_EQ(s.at("k"), "1.5");
  EXPECT_EQ(s.at("T"), "20");
  EXPECT_EQ(s.at("p"), "0.25");
}

TEST(Settings, EnvironmentNames) {
  EXPECT_EQ(env_name("T"), "PFOLO_T");
  EXPECT_EQ(env_name("g0"), "PFOLO_G0");
  ::setenv("PFOLO_ALPHA", "2.5", 1);
  const auto s = settings_from_env();
  ::unsetenv("PFOLO_ALPHA");
  EXPECT_EQ(s.at("alpha"), "2.5");
}

TEST(Settings, JsonFile) {
  const auto dir = temp_dir("json");
  std::ofstream(dir / "c.json") << R"({"algo": "leashed_dimfree", "dim": 2, "k": 0.5,
                                      "comparators": [[1, 0], [0, -2.5]], "Ts": [100, 1000]})";
  const auto s = settings_from_file(dir / "c.json");
  EXPECT_EQ(s.at("algo"), "leashed_dimfree");
  EXPECT_EQ(s.at("dim"), "2");
  EXPECT_EQ(s.at("comparators"), "1,0;0,-2.5");
  EXPECT_EQ(s.at("Ts"), "100,1000");
  const auto cfg = config_from_settings(s);
  EXPECT_EQ(cfg.algo, Algo::leashed_dimfree);
  EXPECT_EQ(cfg.params.k, 0.5);
  ASSERT_TRUE(cfg.comparators.has_value());
  EXPECT_EQ((*cfg.comparators)[1], (Point{0.0, -2.5}));

  std::ofstream(dir / "bad.json") << R"({"nonsense": 1})";
  EXPECT_THROW(settings_from_file(dir / "bad.json"), UsageError);
  std::ofstream(dir / "broken.json") << "{";
  EXPECT_THROW(settings_from_file(dir / "broken.json"), UsageError);
  EXPECT_THROW(settings_from_file(dir / "missing.json"), UsageError);
}

TEST(Config, ParsesAndValidates) {
  const auto cfg = config_from_settings({{"algo", "fixed_diameter"},
                                         {"adversary", "growing"},
                                         {"T", "1e3"},
                                         {"D", "2"},
                                         {"comparators", "0.5,-1"}});
  EXPECT_EQ(cfg.T, 1000u);
  EXPECT_EQ(cfg.diameter, 2.0);
  EXPECT_EQ(cfg.adversary.kind, AdversaryKind::growing);
  EXPECT_EQ(cfg.comparators->size(), 2u);

  EXPECT_THROW(config_from_settings({{"algo", "sgd"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"adversary", "nope"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"T", "0"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"T", "-5"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"k", "abc"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"p", "1.5"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"algo", "leashed"}, {"dim", "3"}}), UsageError);
  EXPECT_THROW(config_from_settings({{"algo", "adagrad_ball"}, {"dim", "2"}, {"comparators", "1,2,3"}}),
               UsageError);
  EXPECT_NO_THROW(config_from_settings({{"algo", "adagrad_ball"}, {"dim", "3"}}));
}

TEST(Run, LeashedZeroAdversary) {
  RunConfig cfg;
  cfg.algo = Algo::leashed;
  cfg.adversary.kind = AdversaryKind::zero;
  cfg.T = 10;
  const auto r = execute_run(cfg);
  ASSERT_EQ(r.trace.size(), 10u);
  for (const auto& row : r.trace) EXPECT_EQ(row.w_norm, 0.0);
  ASSERT_EQ(r.reports.size(), 9u);
  for (const auto& rep : r.reports) EXPECT_EQ(rep.regret, 0.0);
}

TEST(Run, OnsHintsConstantRatiosBelowOne) {
  RunConfig cfg;
  cfg.algo = Algo::ons_hints;
  cfg.adversary.kind = AdversaryKind::constant;
  cfg.T = 1000;
  const auto r = execute_run(cfg);
  EXPECT_EQ(r.bound_kind, "thm1");
  for (const auto& rep : r.reports) {
    ASSERT_TRUE(rep.ratio.has_value());
    EXPECT_LE(*rep.ratio, 1.0);
  }
}

TEST(Run, EveryAlgoStaysWithinItsBound) {
  for (Algo algo : kAllAlgos) {
    for (AdversaryKind kind : kAllAdversaryKinds) {
      RunConfig cfg;
      cfg.algo = algo;
      cfg.adversary.kind = kind;
      cfg.adversary.dim = is_scalar_algo(algo) ? 1 : 3;
      cfg.T = 1000;
      const auto r = execute_run(cfg);
      for (const auto& rep : r.reports) {
        if (rep.bound) {
          EXPECT_LE(rep.regret, *rep.bound) << to_string(algo) << " " << to_string(kind);
        }
      }
    }
  }
}

TEST(Run, SummaryBoundsMatchRecomputedStats) {
  RunConfig cfg;
  cfg.algo = Algo::leashed;
  cfg.adversary.kind = AdversaryKind::spike;
  cfg.T = 800;
  const auto r = execute_run(cfg);
  const auto st = StreamStats::from_ledger(r.ledger, cfg.params.g0);
  for (const auto& rep : r.reports) {
    EXPECT_EQ(*rep.bound, cor1_bound(cfg.params, st, std::abs(rep.comparator[0])));
  }
  // trace and ledger agree
  EXPECT_EQ(r.trace.back().cum_loss, r.ledger.cum_loss());
}

TEST(Run, TraceFieldsPerAlgo) {
  RunConfig cfg;
  cfg.T = 5;
  cfg.algo = Algo::adagrad_ball;
  auto r = execute_run(cfg);
  EXPECT_FALSE(r.trace[0].hint.has_value());
  EXPECT_FALSE(r.trace[0].wealth.has_value());
  cfg.algo = Algo::leashed;
  r = execute_run(cfg);
  EXPECT_TRUE(r.trace[0].hint.has_value());
  EXPECT_TRUE(r.trace[0].barrier.has_value());
  EXPECT_TRUE(r.trace[0].wealth.has_value());
  cfg.algo = Algo::hintless;
  r = execute_run(cfg);
  EXPECT_FALSE(r.trace[0].barrier.has_value());

  std::ostringstream csv;
  write_trace_csv(csv, r.trace);
  std::istringstream in(csv.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "t,w_norm,g_norm,hint,barrier,wealth,cum_loss");
  EXPECT_EQ(first, "1,0,1,1,,1,0");
}

TEST(Run, ReproducibleBitForBit) {
  RunConfig cfg;
  cfg.algo = Algo::leashed_dimfree;
  cfg.adversary.kind = AdversaryKind::seeded_uniform;
  cfg.adversary.dim = 4;
  cfg.T = 500;
  std::ostringstream a, b;
  write_trace_csv(a, execute_run(cfg).trace);
  write_trace_csv(b, execute_run(cfg).trace);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Run, NonFiniteRoundIsReported) {
  RunConfig cfg;
  cfg.algo = Algo::ons_hints;
  cfg.adversary.kind = AdversaryKind::constant;
  cfg.T = 5000;
  try {
    execute_run(cfg);
    FAIL() << "expected overflow to abort the run";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("round "), std::string::npos);
  }
}

TEST(Run, MissingOutputDirectory) {
  RunConfig cfg;
  cfg.out = "/nonexistent/pfolo/dir";
  EXPECT_THROW(cmd_run(cfg), UsageError);
}

TEST(Sweep, GridParsingAndEmptyGrid) {
  RunConfig base;
  const auto g = grid_from_settings({{"ks", "0.1,1,10"}, {"Ts", "100,1000"}}, base);
  EXPECT_EQ(g.ks, (std::vector<double>{0.1, 1.0, 10.0}));
  EXPECT_EQ(g.ps, (std::vector<double>{0.5}));
  EXPECT_EQ(g.cells(), 6u);
  EXPECT_THROW(grid_from_settings({{"ks", ""}}, base), UsageError);
  EXPECT_THROW(grid_from_settings({{"adversaries", "constant,foo"}}, base), UsageError);
  SweepGrid empty;
  EXPECT_THROW(execute_sweep(base, empty), UsageError);
}

TEST(Sweep, SinglePointMatchesRun) {
  RunConfig base;
  base.adversary.kind = AdversaryKind::alternating;
  base.T = 300;
  const auto grid = grid_from_settings({}, base);
  const auto rows = execute_sweep(base, grid);
  const auto run = execute_run(base);
  ASSERT_EQ(rows.size(), run.reports.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].regret, run.reports[i].regret);
    EXPECT_EQ(rows[i].bound, run.reports[i].bound);
    EXPECT_FALSE(rows[i].exponent.has_value());
  }
  std::ostringstream csv;
  write_sweep_csv(csv, rows, false);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "k,p,adversary,T,comparator,regret,bound,ratio");
}

TEST(Sweep, GrowthExponentInsideBarrier) {
  RunConfig base;
  base.adversary.kind = AdversaryKind::alternating;
  base.comparators = std::vector<Point>{{1.0}};
  SweepGrid grid{{1.0}, {0.5}, {AdversaryKind::alternating, AdversaryKind::seeded_signs},
                 {100, 1000, 10000}};
  const auto rows = execute_sweep(base, grid);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.exponent.has_value());
    EXPECT_LE(*r.exponent, 0.55) << to_string(r.adversary);
  }
}

TEST(Sweep, ConstantAdversaryKGrid) {
  RunConfig base;
  base.comparators = std::vector<Point>{{1.0}};
  base.T = 1000;
  SweepGrid grid{{0.1, 1.0, 10.0}, {0.5}, {AdversaryKind::constant}, {1000}};
  const auto rows = execute_sweep(base, grid);
  ASSERT_EQ(rows.size(), 3u);
  // larger barriers let the bettor's wealth compound further on a constant stream
  EXPECT_GT(rows[0].regret, rows[1].regret);
  EXPECT_GT(rows[1].regret, rows[2].regret);
}
