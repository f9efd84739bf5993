// pfolo: run learner stacks against adversaries, sweep parameters, run the acceptance suite.
//
// Exit codes: 0 success, 1 runtime failure (failed criterion, non-finite round), 2 usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pfolo/acceptance.hpp"
#include "pfolo/cli.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct FlagSet {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;

  pfolo::cli::Settings given() const {
    pfolo::cli::Settings s;
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) s[key] = values.at(key);
    }
    return s;
  }
};

void add_run_flags(CLI::App* cmd, FlagSet& f) {
  const std::pair<const char*, const char*> flags[] = {
      {"algo", "ons_hints | hintless | leashed | leashed_dimfree | fixed_diameter | adagrad_ball"},
      {"adversary",
       "constant | alternating | growing | spike | seeded_uniform | seeded_signs | zero | "
       "adaptive_sign"},
      {"scale", "gradient scale"},
      {"rate", "growth exponent for the growing adversary"},
      {"period", "spike period"},
      {"magnitude", "spike magnitude (multiple of scale)"},
      {"T", "number of rounds"},
      {"dim", "dimension"},
      {"k", "barrier scale k"},
      {"p", "barrier exponent p"},
      {"eps", "initial wealth"},
      {"alpha", "ONS regularizer"},
      {"g0", "initial hint"},
      {"D", "diameter for fixed_diameter"},
      {"seed", "adversary seed"},
      {"comparators", "'auto' or points: ';' between points, ',' between coordinates"},
      {"out", "existing output directory"},
  };
  for (const auto& [name, help] : flags) {
    f.values[name];
    f.options[name] = cmd->add_option(std::string("--") + name, f.values[name], help);
  }
  cmd->add_option("--config", f.config_path, "JSON config file (keys are flag names)");
}

pfolo::cli::Settings resolve(const FlagSet& f) {
  using namespace pfolo::cli;
  std::string path = f.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("PFOLO_CONFIG")) path = env;
  }
  const Settings file = path.empty() ? Settings{} : settings_from_file(path);
  return layer_settings(file, settings_from_env(), f.given());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter-free online linear optimization harness"};
  app.require_subcommand(1);

  FlagSet run_flags;
  auto* run = app.add_subcommand("run", "play one stack against one adversary");
  add_run_flags(run, run_flags);

  std::string suite_name = "all";
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("suite", suite_name, "all | coin | reductions | ball | bounds");

  FlagSet sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "cross-product runs over k, p, adversary and T");
  add_run_flags(sweep, sweep_flags);
  for (const auto& [name, help] :
       {std::pair<const char*, const char*>{"ks", "comma list of k values"},
        {"ps", "comma list of p values"},
        {"adversaries", "comma list of adversary kinds"},
        {"Ts", "comma list of horizons"}}) {
    sweep_flags.values[name];
    sweep_flags.options[name] =
        sweep->add_option(std::string("--") + name, sweep_flags.values[name], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*run) {
      const auto cfg = pfolo::cli::config_from_settings(resolve(run_flags));
      const auto result = pfolo::cli::cmd_run(cfg);
      std::printf("%s vs %s, T=%zu: %zu comparators, bound %s\n",
                  std::string(pfolo::cli::to_string(cfg.algo)).c_str(),
                  std::string(pfolo::to_string(cfg.adversary.kind)).c_str(), cfg.T,
                  result.reports.size(), result.bound_kind.c_str());
      std::printf("wrote %s and %s\n", (cfg.out / "trace.csv").string().c_str(),
                  (cfg.out / "summary.json").string().c_str());
      return 0;
    }
    if (*verify) {
      const auto suite = pfolo::acceptance::parse_suite(suite_name);
      const auto results = pfolo::acceptance::run_suite(suite);
      std::size_t passed = 0;
      for (const auto& r : results) {
        std::cout << pfolo::acceptance::format_line(r) << '\n';
        if (r.passed) ++passed;
      }
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? 0 : kFailure;
    }
    if (*sweep) {
      const auto settings = resolve(sweep_flags);
      const auto base = pfolo::cli::config_from_settings(settings);
      const auto grid = pfolo::cli::grid_from_settings(settings, base);
      const auto rows = pfolo::cli::cmd_sweep(base, grid);
      std::printf("%zu cells, %zu rows; wrote %s\n", grid.cells(), rows.size(),
                  (base.out / "sweep.csv").string().c_str());
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
