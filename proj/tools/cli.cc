#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stableflow/basic_solver.h"
#include "stableflow/error.h"
#include "stableflow/fast_solver.h"
#include "stableflow/instance_io.h"
#include "stableflow/lattice.h"
#include "stableflow/oracle.h"
#include "stableflow/quasiflow.h"
#include "stableflow/stability.h"

namespace stableflow {
namespace {

nlohmann::ordered_json StatsJson(const RunStats& s) {
  nlohmann::ordered_json j;
  j["big_iterations"] = s.big_iterations;
  j["updates_total"] = s.updates_total;
  j["updates_max_per_big_iteration"] = s.updates_max_per_big_iteration;
  j["s_events"] = s.s_events;
  j["f_events"] = s.f_events;
  j["m_events"] = s.m_events;
  j["init_updates"] = s.init_updates;
  j["cycles_cancelled"] = s.cycles_cancelled;
  j["trees_drained"] = s.trees_drained;
  j["fallback_steps"] = s.fallback_steps;
  j["fallback_updates"] = s.fallback_updates;
  return j;
}

StabilityMode ModeFor(const std::string& name, const ExcessBounds& bounds) {
  if (name == "flow") return StabilityMode::Flow();
  if (name == "preflow") return StabilityMode::Preflow();
  if (name == "gamma") return StabilityMode::GammaPreflow(bounds);
  return StabilityMode::Quasiflow(bounds);
}

std::pair<Amount, Amount> ParseSeedRange(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const Amount a = std::stoll(text);
      return {a, a};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad seed range '" + text + "'");
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Stable flows in networks with preference orders"};
  app.require_subcommand(1);

  std::string instance_path, flow_path, flow_b_path;

  auto* solve = app.add_subcommand("solve", "compute a stable flow");
  bool basic = false, fast = false, gamma = false, quasi = false;
  bool trace = false, stats = false;
  auto* basic_opt = solve->add_flag("--basic", basic, "balancing/pushing solver");
  auto* fast_opt = solve->add_flag("--fast", fast, "big-iteration solver (default)");
  auto* gamma_opt = solve->add_flag("--gamma", gamma, "gamma-preflow from g records");
  auto* quasi_opt = solve->add_flag("--quasi", quasi, "quasiflow from g and b records");
  basic_opt->excludes(fast_opt)->excludes(gamma_opt)->excludes(quasi_opt);
  fast_opt->excludes(gamma_opt)->excludes(quasi_opt);
  gamma_opt->excludes(quasi_opt);
  solve->add_flag("--trace", trace, "one stderr line per flow update");
  solve->add_flag("--stats", stats, "run statistics as JSON on stderr");
  solve->add_option("instance", instance_path, "instance file or -")->required();

  auto* verify = app.add_subcommand("verify", "check stability of a flow");
  std::string mode_name = "flow";
  verify->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"flow", "preflow", "gamma", "quasi"}));
  verify->add_option("instance", instance_path)->required();
  verify->add_option("flow", flow_path)->required();

  auto* oracle = app.add_subcommand("oracle", "enumerate stable assignments");
  std::string oracle_mode = "flow";
  bool serial = false;
  oracle->add_option("--mode", oracle_mode)
      ->check(CLI::IsMember({"flow", "preflow", "gamma", "quasi"}));
  oracle->add_flag("--serial", serial, "single-threaded enumeration");
  oracle->add_option("instance", instance_path)->required();

  auto* cross = app.add_subcommand("crosscheck", "oracle harness on tiny instances");
  std::string seeds = "0..199";
  cross->add_option("--seeds", seeds, "seed range a..b");

  auto* gen = app.add_subcommand("gen", "random instance");
  RandomNetworkParams params;
  params.num_vertices = 30;
  params.num_edges = 120;
  params.max_capacity = 10;
  Amount bound_max = 0;
  gen->add_option("--n", params.num_vertices)->check(CLI::Range(2, 1 << 20));
  gen->add_option("--m", params.num_edges)->check(CLI::NonNegativeNumber);
  gen->add_option("--cap", params.max_capacity)->check(CLI::NonNegativeNumber);
  gen->add_option("--sources", params.num_sources)->check(CLI::PositiveNumber);
  gen->add_option("--sinks", params.num_sinks)->check(CLI::PositiveNumber);
  gen->add_option("--seed", params.seed);
  gen->add_option("--bounds", bound_max, "also emit g/b records up to this value")
      ->check(CLI::NonNegativeNumber);

  auto* lattice = app.add_subcommand("lattice", "join or meet of two stable flows");
  std::string lattice_op;
  lattice->add_option("op", lattice_op)->required()->check(CLI::IsMember({"join", "meet"}));
  lattice->add_option("instance", instance_path)->required();
  lattice->add_option("flowA", flow_path)->required();
  lattice->add_option("flowB", flow_b_path)->required();

  auto* reduce = app.add_subcommand("reduce", "print a reduced instance");
  std::string reduce_kind;
  reduce->add_option("kind", reduce_kind)->required()->check(CLI::IsMember({"sa", "gamma", "quasi"}));
  reduce->add_option("instance", instance_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const ParsedInstance inst = ParseInstance(ReadTextFile(instance_path));
      const Network& net = inst.network;
      if (gamma || quasi) {
        const QuasiflowResult r = SolveQuasiflow(
            net, inst.bounds,
            gamma ? StabilityKind::kGammaPreflow : StabilityKind::kQuasiflow);
        out << SerializeFlow(net, r.values, true);
        if (stats) err << StatsJson(r.stats).dump() << '\n';
        return kExitOk;
      }
      std::vector<TraceEntry> entries;
      std::optional<SolveResult> result;
      if (basic) {
        BasicSolver solver(net);
        if (trace) solver.set_trace(&entries);
        result.emplace(solver.Run());
      } else {
        FastSolver solver(net);
        if (trace) solver.set_trace(&entries);
        result.emplace(solver.Run());
      }
      for (const TraceEntry& t : entries) {
        err << "u " << t.edge << ' ' << t.delta << ' ' << UpdatePhaseName(t.phase)
            << '\n';
      }
      out << SerializeFlow(net, result->flow.values());
      if (stats) err << StatsJson(result->stats).dump() << '\n';
      return kExitOk;
    }

    if (verify->parsed()) {
      const ParsedInstance inst = ParseInstance(ReadTextFile(instance_path));
      const std::vector<Amount> f = ParseFlow(ReadTextFile(flow_path), inst.network);
      const auto witness =
          FindWitness(inst.network, f, ModeFor(mode_name, inst.bounds));
      if (!witness) {
        out << "STABLE\n";
        return kExitOk;
      }
      out << "UNSTABLE";
      for (EdgeId e : witness->edges) out << ' ' << e;
      out << '\n';
      return kExitUnstable;
    }

    if (oracle->parsed()) {
      const ParsedInstance inst = ParseInstance(ReadTextFile(instance_path));
      const StabilityMode mode = ModeFor(oracle_mode, inst.bounds);
      const StableSet set = serial ? EnumerateStable(inst.network, mode)
                                   : EnumerateStableParallel(inst.network, mode);
      out << "stable " << set.size() << '\n';
      for (const auto& member : set.members) {
        out << 'a';
        for (Amount x : member) out << ' ' << x;
        out << '\n';
      }
      return kExitOk;
    }

    if (cross->parsed()) {
      const auto [first, last] = ParseSeedRange(seeds);
      if (last < first) throw Error(ErrorCode::kParseError, "empty seed range");
      const std::int64_t count = last - first + 1;
      std::vector<CrossCheckReport> reports(count);
      std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < count; ++i) {
        try {
          reports[i] = CrossCheck(RandomTinyNetwork(first + i));
        } catch (const std::exception& ex) {
          errors[i] = ex.what();
        }
      }
      std::int64_t failed = 0, assignments = 0, pairs = 0;
      for (std::int64_t i = 0; i < count; ++i) {
        const Amount seed = first + i;
        if (!errors[i].empty()) reports[i].failures.push_back(errors[i]);
        for (const std::string& f : reports[i].failures) {
          out << "FAIL seed " << seed << ": " << f << '\n';
        }
        failed += reports[i].ok() ? 0 : 1;
        assignments += reports[i].assignments_checked;
        pairs += reports[i].pairs_checked;
      }
      out << "instances " << count << " failed " << failed << " assignments "
          << assignments << " pairs " << pairs << '\n';
      return failed == 0 ? kExitOk : kExitUnstable;
    }

    if (gen->parsed()) {
      const Network net = RandomNetwork(params);
      if (bound_max > 0) {
        const ExcessBounds b = RandomBounds(net, bound_max, params.seed);
        out << SerializeInstance(net, &b);
      } else {
        out << SerializeInstance(net);
      }
      return kExitOk;
    }

    if (lattice->parsed()) {
      const ParsedInstance inst = ParseInstance(ReadTextFile(instance_path));
      const std::vector<Amount> f = ParseFlow(ReadTextFile(flow_path), inst.network);
      const std::vector<Amount> g = ParseFlow(ReadTextFile(flow_b_path), inst.network);
      const JoinMeetResult r = JoinMeet(inst.network, f, g);
      out << SerializeFlow(inst.network, lattice_op == "join" ? r.join : r.meet);
      return kExitOk;
    }

    if (reduce->parsed()) {
      const std::string text = ReadTextFile(instance_path);
      if (reduce_kind == "sa") {
        out << SerializeInstance(FromAllocation(ParseAllocation(text)));
        return kExitOk;
      }
      const ParsedInstance inst = ParseInstance(text);
      const Reduction red = reduce_kind == "gamma"
                                ? ReduceGamma(inst.network, inst.bounds)
                                : ReduceBetaGamma(inst.network, inst.bounds);
      out << SerializeInstance(red.network);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kEdgeIntoSource:
      case ErrorCode::kEdgeOutOfSink:
      case ErrorCode::kSelfLoop:
      case ErrorCode::kDuplicateEdge:
      case ErrorCode::kCapacityOutOfRange:
      case ErrorCode::kTerminalOverlap:
      case ErrorCode::kBadPreferencePermutation:
      case ErrorCode::kPreferenceListOnTerminal:
      case ErrorCode::kInfeasibleParameters:
        return kExitUsage;
      default:
        return kExitError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace stableflow
