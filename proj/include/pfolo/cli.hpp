#pragma once

// Command-line harness: configuration layering, single runs with trace and summary output,
// and parameter sweeps.
//
// Settings are resolved from (lowest to highest precedence) built-in defaults, a JSON config
// file, PFOLO_* environment variables and command-line flags.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pfolo/acceptance.hpp"
#include "pfolo/adversaries.hpp"
#include "pfolo/bounds.hpp"
#include "pfolo/coin_betting.hpp"
#include "pfolo/core.hpp"
#include "pfolo/reductions.hpp"
#include "pfolo/unit_ball.hpp"

namespace pfolo::cli {

/// Invalid flags, config values or combinations.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Algo { ons_hints, hintless, leashed, leashed_dimfree, fixed_diameter, adagrad_ball };

inline constexpr Algo kAllAlgos[] = {Algo::ons_hints,       Algo::hintless,
                                     Algo::leashed,         Algo::leashed_dimfree,
                                     Algo::fixed_diameter,  Algo::adagrad_ball};

inline std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::ons_hints: return "ons_hints";
    case Algo::hintless: return "hintless";
    case Algo::leashed: return "leashed";
    case Algo::leashed_dimfree: return "leashed_dimfree";
    case Algo::fixed_diameter: return "fixed_diameter";
    case Algo::adagrad_ball: return "adagrad_ball";
  }
  return "?";
}

inline Algo parse_algo(std::string_view name) {
  for (Algo a : kAllAlgos) {
    if (to_string(a) == name) return a;
  }
  throw UsageError("unknown algo '" + std::string(name) +
                   "' (expected ons_hints, hintless, leashed, leashed_dimfree, fixed_diameter "
                   "or adagrad_ball)");
}

inline bool is_scalar_algo(Algo a) {
  return a != Algo::leashed_dimfree && a != Algo::adagrad_ball;
}

using Settings = std::map<std::string, std::string>;

/// Keys shared by `run` and `sweep`.
inline constexpr std::string_view kRunKeys[] = {
    "algo", "adversary", "scale", "rate", "period", "magnitude", "T", "dim", "k",
    "p",    "eps",       "alpha", "g0",   "D",      "seed",      "comparators", "out"};

/// Extra keys understood by `sweep`.
inline constexpr std::string_view kSweepKeys[] = {"ks", "ps", "adversaries", "Ts"};

inline bool is_known_key(std::string_view key) {
  return std::find(std::begin(kRunKeys), std::end(kRunKeys), key) != std::end(kRunKeys) ||
         std::find(std::begin(kSweepKeys), std::end(kSweepKeys), key) != std::end(kSweepKeys);
}

inline std::string env_name(std::string_view key) {
  std::string name = "PFOLO_";
  for (char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

inline Settings settings_from_env() {
  Settings s;
  auto collect = [&](std::string_view key) {
    if (const char* v = std::getenv(env_name(key).c_str())) s[std::string(key)] = v;
  };
  for (auto key : kRunKeys) collect(key);
  for (auto key : kSweepKeys) collect(key);
  return s;
}

namespace detail {

inline std::string scalar_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) {
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  throw UsageError("config: '" + key + "' must be a string, number or array");
}

}  // namespace detail

/// Reads a JSON object whose keys are flag names without dashes. Arrays become comma lists;
/// for "comparators", an array of arrays becomes ';'-separated points.
inline Settings settings_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw UsageError("config: top level must be a JSON object");
  Settings s;
  for (const auto& [key, value] : doc.items()) {
    if (!is_known_key(key)) throw UsageError("config: unknown key '" + key + "'");
    if (value.is_array()) {
      std::string joined;
      const bool points = key == "comparators";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) joined += points ? ";" : ",";
        const auto& item = value[i];
        if (item.is_array()) {
          for (std::size_t j = 0; j < item.size(); ++j) {
            if (j > 0) joined += ",";
            joined += detail::scalar_text(item[j], key);
          }
        } else {
          joined += detail::scalar_text(item, key);
        }
      }
      s[key] = joined;
    } else {
      s[key] = detail::scalar_text(value, key);
    }
  }
  return s;
}

inline Settings settings_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config: '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return settings_from_json(doc);
}

/// defaults < file < env < flags
inline Settings layer_settings(const Settings& file, const Settings& env, const Settings& flags) {
  Settings out = file;
  for (const auto& [k, v] : env) out[k] = v;
  for (const auto& [k, v] : flags) out[k] = v;
  return out;
}

inline double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--" + key + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError("--" + key + ": '" + text + "' is not a finite number");
  }
  return v;
}

inline std::uint64_t parse_count(const std::string& key, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    // allow 1e4-style integers
    const double v = parse_real(key, text);
    if (v < 0.0 || v != std::floor(v) || v > 9.0e15) {
      throw UsageError("--" + key + ": '" + text + "' is not a nonnegative integer");
    }
    return static_cast<std::uint64_t>(v);
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError("--" + key + ": '" + text + "' is out of range");
  }
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return parts;
}

/// "auto", or points separated by ';' with coordinates separated by ','. In one dimension a
/// plain comma list of scalars is also accepted.
inline std::optional<std::vector<Point>> parse_comparators(const std::string& text, std::size_t dim) {
  if (text == "auto") return std::nullopt;
  std::vector<Point> out;
  const char point_sep = (dim == 1 && text.find(';') == std::string::npos) ? ',' : ';';
  for (const auto& item : split(text, point_sep)) {
    if (item.empty()) continue;
    Point c;
    for (const auto& coord : split(item, point_sep == ',' ? ';' : ',')) {
      c.push_back(parse_real("comparators", coord));
    }
    if (c.size() != dim) {
      throw UsageError("--comparators: point '" + item + "' has " + std::to_string(c.size()) +
                       " coordinates, expected " + std::to_string(dim));
    }
    out.push_back(std::move(c));
  }
  if (out.empty()) throw UsageError("--comparators: no comparator given");
  return out;
}

struct RunConfig {
  Algo algo = Algo::leashed;
  AdversaryConfig adversary;
  std::size_t T = 1000;
  BoundParams params;
  double diameter = 1.0;
  std::optional<std::vector<Point>> comparators;  // nullopt: the standard sweep
  std::filesystem::path out = ".";

  std::size_t dim() const { return adversary.dim; }

  void validate() const {
    if (T == 0) throw UsageError("--T must be >= 1");
    try {
      adversary.validate();
      params.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (is_scalar_algo(algo) && dim() != 1) {
      throw UsageError("algo " + std::string(to_string(algo)) +
                       " is one-dimensional; use leashed_dimfree or adagrad_ball for --dim > 1");
    }
    if (algo == Algo::fixed_diameter && !(diameter > 0.0)) throw UsageError("--D must be positive");
    if (comparators) {
      for (const auto& c : *comparators) {
        if (c.size() != dim()) throw UsageError("comparator dimension does not match --dim");
      }
    }
  }
};

inline RunConfig config_from_settings(const Settings& s) {
  RunConfig c;
  auto get = [&](const char* key) -> const std::string* {
    const auto it = s.find(key);
    return it == s.end() ? nullptr : &it->second;
  };
  try {
    if (auto v = get("algo")) c.algo = parse_algo(*v);
    if (auto v = get("adversary")) c.adversary.kind = parse_adversary_kind(*v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (auto v = get("scale")) c.adversary.scale = parse_real("scale", *v);
  if (auto v = get("rate")) c.adversary.rate = parse_real("rate", *v);
  if (auto v = get("period")) c.adversary.period = parse_count("period", *v);
  if (auto v = get("magnitude")) c.adversary.magnitude = parse_real("magnitude", *v);
  if (auto v = get("seed")) c.adversary.seed = parse_count("seed", *v);
  if (auto v = get("dim")) c.adversary.dim = parse_count("dim", *v);
  if (auto v = get("T")) c.T = parse_count("T", *v);
  if (auto v = get("k")) c.params.k = parse_real("k", *v);
  if (auto v = get("p")) c.params.p = parse_real("p", *v);
  if (auto v = get("eps")) c.params.epsilon = parse_real("eps", *v);
  if (auto v = get("alpha")) c.params.alpha = parse_real("alpha", *v);
  if (auto v = get("g0")) c.params.g0 = parse_real("g0", *v);
  if (auto v = get("D")) c.diameter = parse_real("D", *v);
  if (auto v = get("comparators")) c.comparators = parse_comparators(*v, c.adversary.dim);
  if (auto v = get("out")) c.out = *v;
  c.validate();
  return c;
}

struct TraceRow {
  std::size_t t = 0;
  double w_norm = 0.0;
  double g_norm = 0.0;
  std::optional<double> hint;
  std::optional<double> barrier;
  std::optional<double> wealth;
  double cum_loss = 0.0;
};

struct ComparatorReport {
  Point comparator;
  double norm = 0.0;
  double regret = 0.0;
  std::optional<double> bound;  // the bound claimed for this stack, if any applies
  std::map<std::string, double> bounds;
  std::optional<double> ratio;
};

struct RunResult {
  RegretLedger ledger{1};
  std::vector<TraceRow> trace;
  StreamStats stats;  // statistics the bounds were evaluated on
  std::string bound_kind;
  std::vector<ComparatorReport> reports;
};

namespace detail {

struct TraceObserver {
  std::vector<TraceRow>* rows;
  double cum_loss = 0.0;

  void operator()(const RoundView& v) {
    cum_loss += dot(v.record.grad, v.record.played);
    rows->push_back({v.record.t, dual_norm(v.record.played), dual_norm(v.record.grad),
                     v.before.hint, v.before.barrier, v.before.wealth, cum_loss});
  }
};

}  // namespace detail

/// Plays the configured stack and evaluates its bound at every comparator.
inline RunResult execute_run(const RunConfig& cfg) {
  cfg.validate();
  const BoundParams& bp = cfg.params;
  const OnsParams op{bp.epsilon, bp.alpha};
  const LeashParams lp{bp.k, bp.p, bp.g0};
  RunResult result;
  detail::TraceObserver obs{&result.trace};
  result.trace.reserve(cfg.T);
  Adversary adv(cfg.adversary);

  // bound evaluators keyed by name; the first one listed is the stack's own claim
  std::vector<std::pair<std::string, std::function<std::optional<double>(const Point&)>>> evals;
  switch (cfg.algo) {
    case Algo::ons_hints: {
      OnsBettor learner(op, adv.envelope(1));
      result.ledger = run_hinted_game(learner, adv, cfg.T, obs);
      result.stats = StreamStats::from_hinted_ledger(result.ledger);
      evals.push_back({"thm1", [&](const Point& c) {
                         return std::optional(thm1_bound(bp, result.stats, dual_norm(c)));
                       }});
      break;
    }
    case Algo::hintless: {
      auto learner = make_hintless(bp.g0, op);
      result.ledger = run_game(learner, adv, cfg.T, obs);
      result.stats = StreamStats::from_ledger(result.ledger, bp.g0);
      evals.push_back({"thm2", [&](const Point& c) {
                         return std::optional(thm2_bound(bp, result.stats, dual_norm(c),
                                                         result.ledger.max_played_norm()));
                       }});
      evals.push_back({"thm1", [&](const Point& c) {
                         return std::optional(thm1_bound(bp, result.stats, dual_norm(c)));
                       }});
      break;
    }
    case Algo::leashed: {
      auto learner = make_leashed(lp, op);
      result.ledger = run_game(learner, adv, cfg.T, obs);
      result.stats = StreamStats::from_ledger(result.ledger, bp.g0);
      evals.push_back({"cor1", [&](const Point& c) {
                         return std::optional(cor1_bound(bp, result.stats, dual_norm(c)));
                       }});
      break;
    }
    case Algo::leashed_dimfree: {
      auto learner = make_dimfree(cfg.dim(), lp, op);
      std::vector<double> scalars;
      scalars.reserve(cfg.T);
      result.ledger = run_game(learner, adv, cfg.T, [&](const RoundView& v) {
        obs(v);
        scalars.push_back(learner.last_scalar());
      });
      result.stats = StreamStats::from_magnitudes(scalars, bp.g0);
      evals.push_back({"dimfree", [&](const Point& c) {
                         return std::optional(dimfree_bound(bp, result.stats, dual_norm(c),
                                                            result.ledger.sum_sq()));
                       }});
      evals.push_back({"cor1", [&](const Point& c) {
                         return std::optional(cor1_bound(bp, result.stats, dual_norm(c)));
                       }});
      break;
    }
    case Algo::fixed_diameter: {
      auto learner = make_fixed_diameter(cfg.diameter, bp.g0, op);
      result.ledger = run_game(learner, adv, cfg.T, obs);
      result.stats = StreamStats::from_ledger(result.ledger, bp.g0);
      evals.push_back({"fixed_diameter", [&](const Point& c) {
                         return std::optional(fixed_diameter_bound(bp, result.stats, dual_norm(c),
                                                                   cfg.diameter));
                       }});
      evals.push_back({"thm1", [&](const Point& c) {
                         return std::optional(thm1_bound(bp, result.stats, dual_norm(c)));
                       }});
      break;
    }
    case Algo::adagrad_ball: {
      AdaGradBall learner(cfg.dim());
      result.ledger = run_game(learner, adv, cfg.T, obs);
      result.stats = StreamStats::from_ledger(result.ledger, bp.g0);
      evals.push_back({"ball", [&](const Point& c) -> std::optional<double> {
                         if (dual_norm(c) > 1.0) return std::nullopt;
                         return ball_regret_bound(result.ledger.sum_sq());
                       }});
      break;
    }
  }
  result.bound_kind = evals.front().first;

  const auto comparators = cfg.comparators ? *cfg.comparators
                                           : comparator_sweep(result.ledger, cfg.adversary.seed);
  for (const auto& c : comparators) {
    ComparatorReport rep;
    rep.comparator = c;
    rep.norm = dual_norm(c);
    rep.regret = result.ledger.regret(c);
    for (std::size_t i = 0; i < evals.size(); ++i) {
      const auto value = evals[i].second(c);
      if (!value) continue;
      rep.bounds[evals[i].first] = *value;
      if (i == 0) rep.bound = *value;
    }
    if (rep.bound && *rep.bound != 0.0) rep.ratio = rep.regret / *rep.bound;
    result.reports.push_back(std::move(rep));
  }
  return result;
}

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_optional(const std::optional<double>& x) {
  return x ? format_real(*x) : std::string();
}

inline void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << "t,w_norm,g_norm,hint,barrier,wealth,cum_loss\n";
  for (const auto& r : rows) {
    out << r.t << ',' << format_real(r.w_norm) << ',' << format_real(r.g_norm) << ','
        << format_optional(r.hint) << ',' << format_optional(r.barrier) << ','
        << format_optional(r.wealth) << ',' << format_real(r.cum_loss) << '\n';
  }
}

inline nlohmann::json optional_json(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return *x;
}

inline nlohmann::json summary_json(const RunConfig& cfg, const RunResult& r) {
  using nlohmann::json;
  json doc;
  doc["algo"] = to_string(cfg.algo);
  doc["adversary"] = {{"kind", to_string(cfg.adversary.kind)},
                      {"scale", cfg.adversary.scale},
                      {"dim", cfg.adversary.dim},
                      {"seed", cfg.adversary.seed},
                      {"rate", cfg.adversary.rate},
                      {"period", cfg.adversary.period},
                      {"magnitude", cfg.adversary.magnitude}};
  doc["T"] = cfg.T;
  doc["params"] = {{"eps", cfg.params.epsilon}, {"alpha", cfg.params.alpha},
                   {"k", cfg.params.k},         {"p", cfg.params.p},
                   {"g0", cfg.params.g0},       {"q_grid", cfg.params.q_grid}};
  if (cfg.algo == Algo::fixed_diameter) doc["params"]["D"] = cfg.diameter;
  doc["stats"] = {{"rounds", r.stats.rounds},         {"sum_sq", r.stats.sum_sq},
                  {"sum_abs", r.stats.sum_abs},       {"max_abs", r.stats.max_abs},
                  {"final_hint", r.stats.final_hint}, {"max_ratio", r.stats.max_ratio}};
  doc["cum_loss"] = optional_json(r.ledger.cum_loss());
  doc["max_played_norm"] = optional_json(r.ledger.max_played_norm());
  doc["bound_kind"] = r.bound_kind;
  json reports = json::array();
  std::optional<double> worst;
  for (const auto& rep : r.reports) {
    json bounds = json::object();
    for (const auto& [name, value] : rep.bounds) bounds[name] = optional_json(value);
    reports.push_back({{"comparator", rep.comparator},
                       {"norm", rep.norm},
                       {"regret", optional_json(rep.regret)},
                       {"bound", optional_json(rep.bound)},
                       {"ratio", optional_json(rep.ratio)},
                       {"bounds", bounds}});
    if (rep.ratio) worst = worst ? std::max(*worst, *rep.ratio) : *rep.ratio;
  }
  doc["comparators"] = reports;
  doc["max_ratio"] = optional_json(worst);
  return doc;
}

inline void require_out_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw UsageError("output directory '" + dir.string() + "' does not exist");
  }
}

/// Writes <out>/trace.csv and <out>/summary.json.
inline RunResult cmd_run(const RunConfig& cfg) {
  cfg.validate();
  require_out_dir(cfg.out);
  RunResult r = execute_run(cfg);
  {
    std::ofstream trace(cfg.out / "trace.csv");
    if (!trace) throw std::runtime_error("cannot write " + (cfg.out / "trace.csv").string());
    write_trace_csv(trace, r.trace);
  }
  std::ofstream summary(cfg.out / "summary.json");
  if (!summary) throw std::runtime_error("cannot write " + (cfg.out / "summary.json").string());
  summary << summary_json(cfg, r).dump(2) << '\n';
  return r;
}

struct SweepGrid {
  std::vector<double> ks;
  std::vector<double> ps;
  std::vector<AdversaryKind> adversaries;
  std::vector<std::size_t> Ts;

  std::size_t cells() const { return ks.size() * ps.size() * adversaries.size() * Ts.size(); }
};

/// Grid lists default to the single base value when a key is absent.
inline SweepGrid grid_from_settings(const Settings& s, const RunConfig& base) {
  SweepGrid g;
  auto list = [&](const char* key) -> std::optional<std::vector<std::string>> {
    const auto it = s.find(key);
    if (it == s.end()) return std::nullopt;
    std::vector<std::string> items;
    for (auto& part : split(it->second, ',')) {
      if (!part.empty()) items.push_back(part);
    }
    if (items.empty()) throw UsageError("--" + std::string(key) + ": empty grid");
    return items;
  };
  if (auto v = list("ks")) {
    for (const auto& x : *v) g.ks.push_back(parse_real("ks", x));
  } else {
    g.ks = {base.params.k};
  }
  if (auto v = list("ps")) {
    for (const auto& x : *v) g.ps.push_back(parse_real("ps", x));
  } else {
    g.ps = {base.params.p};
  }
  if (auto v = list("adversaries")) {
    for (const auto& x : *v) {
      try {
        g.adversaries.push_back(parse_adversary_kind(x));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  } else {
    g.adversaries = {base.adversary.kind};
  }
  if (auto v = list("Ts")) {
    for (const auto& x : *v) g.Ts.push_back(parse_count("Ts", x));
  } else {
    g.Ts = {base.T};
  }
  return g;
}

struct SweepRow {
  double k = 0.0;
  double p = 0.0;
  AdversaryKind adversary = AdversaryKind::constant;
  std::size_t T = 0;
  std::string comparator;
  double regret = 0.0;
  std::optional<double> bound;
  std::optional<double> ratio;
  std::optional<double> exponent;
};

inline std::string format_point(const Point& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ';';
    s += format_real(c[i]);
  }
  return s;
}

/// Runs every grid cell (concurrently) and fills the growth exponent per configuration when
/// the T grid has at least two horizons.
inline std::vector<SweepRow> execute_sweep(const RunConfig& base, const SweepGrid& grid) {
  if (grid.cells() == 0) throw UsageError("sweep: empty grid");
  std::vector<RunConfig> cells;
  for (double k : grid.ks) {
    for (double p : grid.ps) {
      for (AdversaryKind a : grid.adversaries) {
        for (std::size_t T : grid.Ts) {
          RunConfig c = base;
          c.params.k = k;
          c.params.p = p;
          c.adversary.kind = a;
          c.T = T;
          c.validate();
          cells.push_back(std::move(c));
        }
      }
    }
  }
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<SweepRow>> per_cell(cells.size());
  for (std::size_t start = 0; start < cells.size(); start += workers) {
    std::vector<std::future<std::vector<SweepRow>>> batch;
    for (std::size_t i = start; i < std::min(cells.size(), start + workers); ++i) {
      batch.push_back(std::async(std::launch::async, [&cell = cells[i]] {
        const RunResult r = execute_run(cell);
        std::vector<SweepRow> rows;
        for (const auto& rep : r.reports) {
          rows.push_back({cell.params.k, cell.params.p, cell.adversary.kind, cell.T,
                          format_point(rep.comparator), rep.regret, rep.bound, rep.ratio,
                          std::nullopt});
        }
        return rows;
      }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) per_cell[start + i] = batch[i].get();
  }
  std::vector<SweepRow> rows;
  for (auto& cell_rows : per_cell) {
    for (auto& row : cell_rows) rows.push_back(std::move(row));
  }

  std::vector<std::size_t> horizons = grid.Ts;
  std::sort(horizons.begin(), horizons.end());
  horizons.erase(std::unique(horizons.begin(), horizons.end()), horizons.end());
  if (horizons.size() >= 2) {
    using Key = std::tuple<double, double, AdversaryKind, std::string>;
    std::map<Key, std::map<std::size_t, double>> series;
    for (const auto& r : rows) series[{r.k, r.p, r.adversary, r.comparator}][r.T] = r.regret;
    std::map<Key, double> exponents;
    for (const auto& [key, by_T] : series) {
      if (by_T.size() != horizons.size()) continue;
      std::vector<double> xs, ys;
      for (const auto& [T, regret] : by_T) {
        xs.push_back(static_cast<double>(T));
        ys.push_back(regret);
      }
      exponents[key] = acceptance::regret_growth_exponent(xs, ys);
    }
    for (auto& r : rows) {
      const auto it = exponents.find({r.k, r.p, r.adversary, r.comparator});
      if (it != exponents.end()) r.exponent = it->second;
    }
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                            bool with_exponent) {
  out << "k,p,adversary,T,comparator,regret,bound,ratio" << (with_exponent ? ",exponent" : "")
      << '\n';
  for (const auto& r : rows) {
    out << format_real(r.k) << ',' << format_real(r.p) << ',' << to_string(r.adversary) << ','
        << r.T << ',' << r.comparator << ',' << format_real(r.regret) << ','
        << format_optional(r.bound) << ',' << format_optional(r.ratio);
    if (with_exponent) out << ',' << format_optional(r.exponent);
    out << '\n';
  }
}

/// Writes <out>/sweep.csv.
inline std::vector<SweepRow> cmd_sweep(const RunConfig& base, const SweepGrid& grid) {
  require_out_dir(base.out);
  auto rows = execute_sweep(base, grid);
  std::set<std::size_t> horizons(grid.Ts.begin(), grid.Ts.end());
  std::ofstream out(base.out / "sweep.csv");
  if (!out) throw std::runtime_error("cannot write " + (base.out / "sweep.csv").string());
  write_sweep_csv(out, rows, horizons.size() >= 2);
  return rows;
}

}  // namespace pfolo::cli
