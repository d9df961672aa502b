#include "csn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "csn/capacity.hpp"
#include "csn/codes.hpp"
#include "csn/mincut.hpp"
#include "csn/oracle.hpp"
#include "csn/sequencing.hpp"

namespace csn::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

struct SystemFlags {
  std::string config;
  int n = -1;
  int k = -1;
  int L = -1;
  int R = -1;
  int E = 0;
  int d_I = -1;
  int d_C = -1;
  std::string alpha = "0";
  std::string beta_I;
  std::string beta_C;
};

void add_system_flags(CLI::App* cmd, SystemFlags& f, bool with_repair) {
  cmd->add_option("--config", f.config, "flat JSON config file (replaces the inline flags)");
  cmd->add_option("--n", f.n, "node count (default L*R+E)");
  cmd->add_option("--k", f.k, "reconstruction threshold");
  cmd->add_option("--L", f.L, "cluster count");
  cmd->add_option("--R", f.R, "nodes per cluster");
  cmd->add_option("--E", f.E, "separate nodes");
  if (with_repair) {
    cmd->add_option("--dI", f.d_I, "intra-cluster helpers (default R-1)");
    cmd->add_option("--dC", f.d_C, "cross-cluster helpers");
    cmd->add_option("--alpha", f.alpha, "storage per node, p or p/q");
    cmd->add_option("--betaI", f.beta_I, "intra-cluster bandwidth per helper");
    cmd->add_option("--betaC", f.beta_C, "cross-cluster bandwidth per helper");
  }
}

Error usage(const std::string& what) { return Error(ErrorCode::InvalidArgument, what); }

void require(bool ok, const std::string& what) {
  if (!ok) throw usage(what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NodeParams node_params(const SystemFlags& f) {
  require(f.k >= 0 && f.L >= 0 && f.R >= 0, "--k, --L and --R are required");
  NodeParams nodes{f.n, f.k, f.L, f.R, f.E};
  if (nodes.n < 0) nodes.n = f.L * f.R + f.E;
  return nodes;
}

RawConfig raw_config(const SystemFlags& f) {
  if (!f.config.empty()) return parse_config_json(read_file(f.config));
  RawConfig raw;
  raw.nodes = node_params(f);
  require(f.d_C >= 0, "--dC is required");
  require(!f.beta_I.empty() && !f.beta_C.empty(), "--betaI and --betaC are required");
  raw.repair.alpha = Rational::parse(f.alpha);
  raw.repair.d_I = f.d_I >= 0 ? f.d_I : f.R - 1;
  raw.repair.d_C = f.d_C;
  raw.repair.beta_I = Rational::parse(f.beta_I);
  raw.repair.beta_C = Rational::parse(f.beta_C);
  return raw;
}

std::string approx(const Rational& r) { return r.str() + " (approx " + r.decimal(6) + ")"; }

std::string join(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"exact", r.str()}, {"num", r.num()}, {"den", r.den()}, {"approx", r.decimal(6)}};
}

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw usage("cannot write " + path);
  file << text;
}

int cmd_capacity(const SystemFlags& f, const std::string& format, std::uint64_t budget, int workers,
                 const std::string& out_path, std::ostream& out) {
  const SystemConfig cfg = validate_config(raw_config(f));
  Rational value;
  SelectedNodeDistribution s;
  ClusterOrder order;
  std::string method;
  std::vector<Rational> weights;
  if (cfg.E() <= 1) {
    const WeightSequence seq = weight_sequence(cfg, variant_for(cfg));
    value = capped_sum(seq.w_star, cfg.alpha());
    weights = seq.w_star;
    method = std::string("closed-form-") + to_string(seq.variant);
    if (cfg.E() == 1) {
      s = horizontal_selection(cfg.nodes(), 1);
      order = optimal_order_with_separate_at(cfg.nodes(), cfg.k());
    } else {
      s = horizontal_selection(cfg.nodes(), 0);
      order = vertical_order(s, {});
    }
  } else {
    const BruteForceResult r = brute_force_capacity(cfg, SearchOptions{budget, workers});
    value = r.value;
    s = r.s;
    order = r.order;
    weights = part_incoming_weights(cfg, order).w;
    method = "exhaustive-search";
  }

  std::ostringstream text;
  if (format == "json") {
    ordered_json j;
    j["config"] = ordered_json::parse(config_to_json(cfg));
    j["capacity"] = rational_json(value);
    j["method"] = method;
    j["distribution"] = s.str();
    j["order"] = order.str();
    ordered_json w = ordered_json::array();
    for (const Rational& x : weights) w.push_back(x.str());
    j["weights"] = w;
    text << j.dump(2) << "\n";
  } else {
    text << "capacity: " << approx(value) << "\n";
    text << "method: " << method << "\n";
    text << "distribution: " << s.str() << "\n";
    text << "order: " << order.str() << "\n";
    text << "weights: " << join(weights) << "\n";
  }
  emit(out_path, out, text.str());
  return kExitOk;
}

struct TradeoffFlags {
  std::string tau;
  std::string file_size;
  std::string start;
  std::string stop;
  std::string step;
};

int cmd_tradeoff(const SystemFlags& f, const TradeoffFlags& t, const std::string& format, const std::string& out_path,
                 std::ostream& out) {
  const NodeParams nodes = node_params(f);
  validate_nodes(nodes);
  require(!t.tau.empty() && !t.file_size.empty(), "--tau and --M are required");
  require(!t.start.empty() && !t.stop.empty() && !t.step.empty(), "--grid-start, --grid-stop and --grid-step are required");
  const std::vector<Rational> grid =
      rational_grid(Rational::parse(t.start), Rational::parse(t.stop), Rational::parse(t.step));
  require(!grid.empty(), "beta_C grid is empty");

  std::vector<int> d_values;
  if (f.d_C >= 0) {
    d_values.push_back(f.d_C);
  } else {
    for (int d = std::max(0, nodes.k - nodes.R + 1); d <= nodes.n - nodes.R; ++d) d_values.push_back(d);
  }
  const Rational tau = Rational::parse(t.tau);
  const Rational file_size = Rational::parse(t.file_size);

  std::ostringstream text;
  if (format == "json") {
    ordered_json curves = ordered_json::array();
    for (int d_C : d_values) {
      const TradeoffCurve c = tradeoff_curve(nodes, d_C, tau, file_size, grid);
      ordered_json pts = ordered_json::array();
      for (const auto& p : c.points) pts.push_back({{"beta_C", p.beta_C.str()}, {"alpha", p.alpha_star.str()}});
      ordered_json bad = ordered_json::array();
      for (const auto& b : c.unstorable) bad.push_back(b.str());
      curves.push_back({{"d_C", d_C}, {"variant", to_string(c.variant)}, {"points", pts}, {"unstorable", bad}});
    }
    text << ordered_json{{"M", file_size.str()}, {"tau", tau.str()}, {"curves", curves}}.dump(2) << "\n";
  } else {
    text << "beta_C_num,beta_C_den,alpha_num,alpha_den,d_C,variant\n";
    for (int d_C : d_values) {
      const TradeoffCurve c = tradeoff_curve(nodes, d_C, tau, file_size, grid);
      for (const auto& p : c.points) {
        text << p.beta_C.num() << ',' << p.beta_C.den() << ',' << p.alpha_star.num() << ',' << p.alpha_star.den() << ','
             << d_C << ',' << to_string(c.variant) << "\n";
      }
    }
  }
  emit(out_path, out, text.str());
  return kExitOk;
}

int cmd_verify(const std::string& family_name, std::uint64_t budget, int workers, const std::string& out_path,
               std::ostream& out) {
  VerificationFamily family = named_family(family_name);
  family.search.budget = budget;
  family.search.workers = workers;
  const auto configs = family_configs(family);
  const auto reports = verify_claims(family);

  std::map<std::string, std::pair<int, int>> tally;
  ordered_json failures = ordered_json::array();
  for (const auto& r : reports) {
    auto& t = tally[r.claim];
    if (r.passed) {
      ++t.first;
    } else {
      ++t.second;
      failures.push_back({{"instance", r.instance}, {"claim", r.claim}, {"counterexample", r.counterexample}});
    }
  }
  ordered_json claims = ordered_json::object();
  for (const auto& [claim, t] : tally) claims[claim] = {{"passed", t.first}, {"failed", t.second}};
  ordered_json j;
  j["family"] = family.name;
  j["configs"] = configs.size();
  j["reports"] = reports.size();
  j["passed"] = failures.empty();
  j["claims"] = claims;
  j["failures"] = failures;
  emit(out_path, out, j.dump(2) + "\n");
  return failures.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_compare(const SystemFlags& f, const std::string& format, const std::string& out_path, std::ostream& out) {
  const bool uncapped = f.config.empty() && f.alpha == "inf";
  SystemFlags flags = f;
  if (uncapped) flags.alpha = "0";
  RawConfig raw = raw_config(flags);
  require(raw.nodes.E == 0, "compare starts from a cluster-only system (--E 0)");
  Rational alpha = raw.repair.alpha;
  if (uncapped) {
    // No part weight exceeds d * beta_I, so every cut is uncapped there.
    alpha = Rational(raw.repair.d()) * raw.repair.beta_I;
  }
  const ComparisonVerdict v = compare_separate(raw.nodes, raw.repair, alpha);
  std::ostringstream text;
  if (format == "json") {
    text << ordered_json{{"alpha", alpha.str()},
                         {"verdict", to_string(v.outcome)},
                         {"capacity_without", rational_json(v.capacity_without)},
                         {"capacity_with", rational_json(v.capacity_with)}}
                .dump(2)
         << "\n";
  } else {
    text << "verdict: " << to_string(v.outcome) << "\n";
    text << "alpha: " << alpha.str() << (uncapped ? " (uncapped)" : "") << "\n";
    text << "capacity without separate node: " << approx(v.capacity_without) << "\n";
    text << "capacity with separate node: " << approx(v.capacity_with) << "\n";
  }
  emit(out_path, out, text.str());
  return kExitOk;
}

int cmd_construct(std::uint32_t q, std::uint64_t seed, std::uint64_t budget, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  SearchStats stats;
  const CodeInstance inst = search_construction(q, seed, budget, &stats);
  emit(out_path, out, to_text(inst));
  err << "found after " << stats.attempts << " attempts\n";
  return kExitOk;
}

Rational json_rational(const ordered_json& v, const std::string& key) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw usage("config key '" + key + "' must be an integer or a \"p/q\" string");
}

}  // namespace

RawConfig parse_config_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage(std::string("config is not valid JSON: ") + e.what());
  }
  require(j.is_object(), "config must be a JSON object");
  static const std::vector<std::string> known = {"n", "k", "L", "R", "E", "alpha", "d_I", "beta_I", "d_C", "beta_C"};
  for (const auto& [key, value] : j.items()) {
    require(std::find(known.begin(), known.end(), key) != known.end(), "unknown config key '" + key + "'");
  }
  auto integer = [&](const std::string& key) {
    require(j.contains(key), "config is missing '" + key + "'");
    require(j[key].is_number_integer(), "config key '" + key + "' must be an integer");
    return j[key].get<int>();
  };
  auto rational = [&](const std::string& key) {
    require(j.contains(key), "config is missing '" + key + "'");
    return json_rational(j[key], key);
  };
  RawConfig raw;
  raw.nodes.k = integer("k");
  raw.nodes.L = integer("L");
  raw.nodes.R = integer("R");
  raw.nodes.E = j.contains("E") ? integer("E") : 0;
  raw.nodes.n = j.contains("n") ? integer("n") : raw.nodes.L * raw.nodes.R + raw.nodes.E;
  raw.repair.alpha = j.contains("alpha") ? rational("alpha") : Rational(0);
  raw.repair.d_I = j.contains("d_I") ? integer("d_I") : raw.nodes.R - 1;
  raw.repair.beta_I = rational("beta_I");
  raw.repair.d_C = integer("d_C");
  raw.repair.beta_C = rational("beta_C");
  return raw;
}

std::string config_to_json(const SystemConfig& cfg) {
  ordered_json j;
  j["n"] = cfg.n();
  j["k"] = cfg.k();
  j["L"] = cfg.L();
  j["R"] = cfg.R();
  j["E"] = cfg.E();
  j["alpha"] = cfg.alpha().str();
  j["d_I"] = cfg.repair().d_I;
  j["beta_I"] = cfg.beta_I().str();
  j["d_C"] = cfg.repair().d_C;
  j["beta_C"] = cfg.beta_C().str();
  return j.dump();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity and tradeoff analysis for storage systems with clusters and separate nodes"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "text";
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 1;
  int workers = 1;

  SystemFlags cap_flags;
  auto* capacity = app.add_subcommand("capacity", "exact capacity and the achieving repair sequence");
  add_system_flags(capacity, cap_flags, true);

  SystemFlags trade_flags;
  TradeoffFlags trade;
  auto* tradeoff = app.add_subcommand("tradeoff", "least alpha per beta_C on a grid, as CSV");
  add_system_flags(tradeoff, trade_flags, false);
  tradeoff->add_option("--dC", trade_flags.d_C, "cross-cluster helpers (default: every valid value)");
  tradeoff->add_option("--tau", trade.tau, "beta_I / beta_C")->required();
  tradeoff->add_option("--M", trade.file_size, "file size")->required();
  tradeoff->add_option("--grid-start", trade.start, "first beta_C")->required();
  tradeoff->add_option("--grid-stop", trade.stop, "last beta_C (inclusive)")->required();
  tradeoff->add_option("--grid-step", trade.step, "beta_C step")->required();

  std::string family = "small-sweep";
  auto* verify = app.add_subcommand("verify", "check every closed-form claim against the oracles");
  verify->add_option("--family", family, "tiny, small-sweep or acceptance-sweep");

  SystemFlags cmp_flags;
  auto* compare = app.add_subcommand("compare", "effect of adding one separate node (--alpha inf for uncapped)");
  add_system_flags(compare, cmp_flags, true);

  std::uint32_t q = 13;
  std::uint64_t attempts = 100'000;
  auto* construct = app.add_subcommand("construct", "search a minimum-storage code instance for n=5, k=3");
  construct->add_option("--q", q, "prime field size");
  construct->add_option("--attempts", attempts, "attempt budget");

  for (auto* cmd : {capacity, tradeoff, verify, compare, construct}) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--seed", seed, "search seed");
    cmd->add_option("--budget", budget, "enumeration budget");
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  }
  for (auto* cmd : {capacity, compare}) cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  tradeoff->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*capacity) return cmd_capacity(cap_flags, format, budget, workers, out_path, out);
    if (*tradeoff) return cmd_tradeoff(trade_flags, trade, format == "text" ? "csv" : format, out_path, out);
    if (*verify) return cmd_verify(family, budget, workers, out_path, out);
    if (*compare) return cmd_compare(cmp_flags, format, out_path, out);
    if (*construct) return cmd_construct(q, seed, attempts, out_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SearchExhausted ? kExitVerificationFailed : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace csn::cli
