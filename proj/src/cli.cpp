#include "rankrange/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rankrange/dispatch.hpp"
#include "rankrange/instance_io.hpp"
#include "rankrange/random.hpp"

namespace rankrange {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_source(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError(path + ": cannot open file");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Cand find_label(const std::vector<std::string>& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw ParseError("unknown candidate label \"" + label + "\"");
  return static_cast<Cand>(it - labels.begin());
}

struct Common {
  std::uint64_t cap = kDefaultCap;
};

struct DecideArgs {
  std::string file;
  std::string engine = "auto";
  int max_fixed_k = 3;
  std::string candidate, extremum, cmp;
  std::optional<int> k;
};

struct RankSetArgs {
  std::string file, candidate;
};

struct GadgetArgs {
  std::string name, graph, x3c, core, focus, rule = "plurality";
  int k = 1;
};

struct VerifyArgs {
  std::string file;
};

struct BenchArgs {
  std::uint64_t seed = 1;
  std::string rule = "plurality";
  std::vector<int> sizes{10, 20, 40};
  int voters = 0;
  int k = 2;
  double density = 0.3;
  int count = 3;
};

json run_decide(const DecideArgs& a, const Common& common, std::istream& in) {
  const InstanceDocument doc = parse_instance(read_source(a.file, in));
  RankQuery q = doc.query ? doc.rank_query() : RankQuery{doc.profile, 0, doc.tie, doc.rule};
  if (!doc.query && a.candidate.empty()) throw ParseError("query: the document has no query; pass --candidate");
  if (!a.candidate.empty()) q.c = find_label(doc.labels, a.candidate);
  if (!a.extremum.empty()) q.extremum = a.extremum == "min" ? Extremum::min : Extremum::max;
  if (!a.cmp.empty()) q.cmp = a.cmp == "lt" ? Cmp::lt : Cmp::gt;
  if (a.k) q.k = *a.k;

  DecideOptions options;
  options.engine = a.engine == "oracle" ? EnginePreference::oracle
                   : a.engine == "solver" ? EnginePreference::solver
                                          : EnginePreference::automatic;
  options.oracle.cap = common.cap;
  options.max_fixed_k = a.max_fixed_k;
  const auto start = Clock::now();
  const Outcome outcome = evaluate(q, options);
  json out{{"answer", outcome.answer}, {"engine", outcome.engine}};
  if (outcome.witness) out["witness"] = witness_to_json(*outcome.witness, doc.labels);
  out["elapsed_ms"] = ms_since(start);
  return out;
}

json run_rank_set(const RankSetArgs& a, const Common& common, std::istream& in) {
  const InstanceDocument doc = parse_instance(read_source(a.file, in));
  OracleOptions options;
  options.cap = common.cap;
  const auto start = Clock::now();
  json answer = json::object();
  if (!a.candidate.empty()) {
    const Cand c = find_label(doc.labels, a.candidate);
    answer[a.candidate] = rank_set(doc.profile, c, doc.tie, doc.rule, options);
  } else {
    const auto sets = rank_sets(doc.profile, doc.tie, doc.rule, options);
    for (std::size_t c = 0; c < sets.size(); ++c) answer[doc.labels[c]] = sets[c];
  }
  return json{{"answer", answer}, {"engine", "oracle"}, {"elapsed_ms", ms_since(start)}};
}

CoreInstance read_core(const GadgetArgs& a, std::istream& in) {
  if (a.core.empty()) throw InvalidInstanceError("padding gadgets need --core FILE");
  const InstanceDocument doc = parse_instance(read_source(a.core, in));
  CoreInstance core{doc.profile, 0, doc.rule, doc.labels};
  if (!a.focus.empty()) core.focus = find_label(doc.labels, a.focus);
  else if (doc.query) core.focus = doc.query->candidate;
  else throw InvalidInstanceError("the core document has no query; pass --focus");
  return core;
}

GadgetInstance build_gadget(const GadgetArgs& a, const Common& common, std::istream& in) {
  auto graph = [&] {
    if (a.graph.empty()) throw InvalidInstanceError(a.name + " needs --graph");
    return Graph::parse(a.graph);
  };
  if (a.name == "vc") return vc_gadget(graph(), parse_rule_name(a.rule), a.k);
  if (a.name == "is") return is_gadget(graph(), parse_rule_name(a.rule), a.k);
  if (a.name == "ds") return ds_gadget(graph(), a.k);
  if (a.name == "bucklin-is") return bucklin_is_gadget(graph(), a.k);
  if (a.name == "x3c") {
    if (a.x3c.empty()) throw InvalidInstanceError("x3c needs --x3c q:a-b-c,...");
    return x3c_gadget(X3CInstance::parse(a.x3c), a.k);
  }
  if (a.name == "pw-padding") return pw_padding_gadget(read_core(a, in), a.k);
  if (a.name == "copeland-padding") return copeland_padding(read_core(a, in), a.k);
  if (a.name == "bucklin-padding") return bucklin_padding(read_core(a, in), a.k);
  if (a.name == "maximin-padding") return maximin_padding(read_core(a, in), a.k, common.cap);
  throw InvalidInstanceError("unknown gadget \"" + a.name + "\"");
}

json run_verify(const VerifyArgs& a, const Common& common, std::istream& in) {
  const GadgetInstance g = from_document(parse_instance(read_source(a.file, in)));
  OracleOptions options;
  options.cap = common.cap;
  const auto start = Clock::now();
  const auto checks = verify_claims(g, options);
  const bool bands = verify_bands(g, options);
  bool all = bands;
  json claims = json::array();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    all = all && checks[i].holds();
    claims.push_back({{"property", to_string(g.claims[i].property)},
                      {"property_holds", checks[i].property},
                      {"rank_side_holds", checks[i].rank_side},
                      {"biconditional", checks[i].holds()}});
  }
  json out{{"answer", all}, {"engine", "oracle"}, {"gadget", g.gadget}, {"claims", claims}, {"bands", bands}};
  if (g.precondition) out["precondition"] = *g.precondition;
  out["elapsed_ms"] = ms_since(start);
  return out;
}

json run_bench(const BenchArgs& a, const Common& common) {
  const ScoringRule rule = parse_rule_name(a.rule);
  std::mt19937_64 rng(a.seed);
  const auto start = Clock::now();
  json rows = json::array();
  for (int m : a.sizes) {
    if (m < 2) throw RangeError("bench sizes must be at least 2");
    for (int i = 0; i < a.count; ++i) {
      const int n = a.voters > 0 ? a.voters : m;
      const RankQuery q{random_partial_profile(m, n, a.density, rng), 0, random_linear_order(m, rng), rule,
                        Extremum::min, Cmp::lt, a.k};
      json row{{"m", m}, {"n", n}};
      DecideOptions solver;
      solver.engine = EnginePreference::solver;
      auto t = Clock::now();
      const Outcome s = evaluate(q, solver);
      row["answer"] = s.answer;
      row["engine"] = s.engine;
      row["solver_ms"] = ms_since(t);
      DecideOptions oracle;
      oracle.engine = EnginePreference::oracle;
      oracle.oracle.cap = common.cap;
      t = Clock::now();
      try {
        const Outcome o = evaluate(q, oracle);
        row["oracle_ms"] = ms_since(t);
        row["agree"] = o.answer == s.answer;
      } catch (const LimitError&) {
        row["oracle_ms"] = ms_since(t);
        row["oracle"] = "LimitError";
      }
      rows.push_back(std::move(row));
    }
  }
  return json{{"answer", rows}, {"engine", "solver"}, {"elapsed_ms", ms_since(start)}};
}

void report(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimal and maximal ranks under partial votes", "rankrange"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--cap", common.cap, "Enumeration limit for the oracle")->capture_default_str();

  DecideArgs decide_args;
  auto* decide_cmd = app.add_subcommand("decide", "Answer the document's rank query");
  decide_cmd->add_option("file", decide_args.file, "Instance document (stdin when omitted)");
  decide_cmd->add_option("--engine", decide_args.engine)->check(CLI::IsMember({"auto", "oracle", "solver"}));
  decide_cmd->add_option("--max-fixed-k", decide_args.max_fixed_k, "Largest fixed parameter sent to a solver");
  decide_cmd->add_option("--candidate", decide_args.candidate);
  decide_cmd->add_option("--extremum", decide_args.extremum)->check(CLI::IsMember({"min", "max"}));
  decide_cmd->add_option("--cmp", decide_args.cmp)->check(CLI::IsMember({"lt", "gt"}));
  decide_cmd->add_option("--k", decide_args.k);
  decide_cmd->add_option("--cap", common.cap);

  RankSetArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank-set", "Every rank each candidate can take");
  rank_cmd->add_option("file", rank_args.file, "Instance document (stdin when omitted)");
  rank_cmd->add_option("--candidate", rank_args.candidate);
  rank_cmd->add_option("--cap", common.cap);

  GadgetArgs gadget_args;
  auto* gadget_cmd = app.add_subcommand("gadget", "Emit a reduction instance");
  gadget_cmd->add_option("name", gadget_args.name)
      ->required()
      ->check(CLI::IsMember({"vc", "is", "ds", "bucklin-is", "x3c", "pw-padding", "copeland-padding",
                             "bucklin-padding", "maximin-padding"}));
  gadget_cmd->add_option("--graph", gadget_args.graph, "K4, C5, P3, prism or n:u-w,...");
  gadget_cmd->add_option("--x3c", gadget_args.x3c, "q:a-b-c,...");
  gadget_cmd->add_option("--core", gadget_args.core, "Core instance document for padding gadgets");
  gadget_cmd->add_option("--focus", gadget_args.focus, "Focus label of the core");
  gadget_cmd->add_option("--rule", gadget_args.rule, "Positional rule for vc and is");
  gadget_cmd->add_option("--k", gadget_args.k)->required();
  gadget_cmd->add_option("--cap", common.cap);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a gadget document's claims against the oracles");
  verify_cmd->add_option("file", verify_args.file, "Gadget document (stdin when omitted)");
  verify_cmd->add_option("--cap", common.cap);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Solver and oracle timings on random profiles");
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--rule", bench_args.rule);
  bench_cmd->add_option("--sizes", bench_args.sizes)->delimiter(',');
  bench_cmd->add_option("--voters", bench_args.voters, "Voters per profile (default m)");
  bench_cmd->add_option("--k", bench_args.k);
  bench_cmd->add_option("--density", bench_args.density)->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--count", bench_args.count);
  bench_cmd->add_option("--cap", common.cap);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return 2;
  }

  try {
    json result;
    if (*decide_cmd) result = run_decide(decide_args, common, in);
    else if (*rank_cmd) result = run_rank_set(rank_args, common, in);
    else if (*gadget_cmd) {
      out << serialize_instance(to_document(build_gadget(gadget_args, common, in)));
      return 0;
    } else if (*verify_cmd) result = run_verify(verify_args, common, in);
    else result = run_bench(bench_args, common);
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    report(err, e.kind(), e.what());
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what());
  }
  return 1;
}

}  // namespace rankrange
