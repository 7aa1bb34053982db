// Acceptance sweep: one PASS/FAIL line per criterion, exit 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "stableflow/basic_solver.h"
#include "stableflow/error.h"
#include "stableflow/fast_solver.h"
#include "stableflow/lattice.h"
#include "stableflow/oracle.h"
#include "stableflow/quasiflow.h"
#include "stableflow/random.h"
#include "stableflow/stability.h"

namespace stableflow {
namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;
std::map<int, std::string> lines;

void Report(int id, const char* name, bool ok, const std::string& detail) {
  lines[id] = std::string(ok ? "PASS" : "FAIL") + " [" + std::to_string(id) +
              "] " + name + ": " + detail;
  if (!ok) ++failures;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// n <= 30, m <= 120, caps <= 10, 1-3 sources and sinks
Network SweepInstance(std::uint64_t seed) {
  Rng rng(seed * 7919 + 1);
  RandomNetworkParams p;
  p.num_vertices = static_cast<int>(rng.Between(4, 30));
  p.num_sources = static_cast<int>(rng.Between(1, 3));
  p.num_sinks = static_cast<int>(rng.Between(1, 3));
  if (p.num_sources + p.num_sinks >= p.num_vertices) p.num_sinks = 1;
  const int most = std::min(
      120, LegalPairCount(p.num_vertices, p.num_sources, p.num_sinks));
  p.num_edges =
      static_cast<int>(rng.Between(std::min(p.num_vertices, most), most));
  p.max_capacity = 10;
  p.seed = rng.Next();
  return RandomNetwork(p);
}

bool Replays(const Network& net, const std::vector<TraceEntry>& trace,
             std::span<const Amount> final) {
  std::vector<Amount> f(net.num_edges(), 0);
  for (const TraceEntry& t : trace) {
    f[t.edge] += t.delta;
    if (f[t.edge] < 0 || f[t.edge] > net.capacity(t.edge)) return false;
  }
  return std::equal(f.begin(), f.end(), final.begin(), final.end());
}

bool EventsWithinBounds(const RunStats& s) {
  for (std::size_t e = 0; e < s.saturations.size(); ++e) {
    if (s.saturations[e] > 1 || s.freeings[e] > 1 || s.gamma_additions[e] > 2) {
      return false;
    }
  }
  return true;
}

bool Stable(const Network& net, std::span<const Amount> f) {
  return Classify(net, f) == FlowClass::kFlow &&
         !FindWitness(net, f, StabilityMode::Flow());
}

void SolverSweep() {
  const auto start = Clock::now();
  int bad_output = 0, bad_events = 0, bad_iteration = 0;
  std::int64_t fallback = 0, updates = 0, worst_ratio_num = 0,
               worst_ratio_den = 1;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Network net = SweepInstance(seed);
    const SolveResult basic = RunBasic(net);
    const SolveResult fast = RunFast(net);
    if (!Stable(net, basic.flow.values()) || !Stable(net, fast.flow.values())) {
      ++bad_output;
    }
    if (!EventsWithinBounds(basic.stats) || !EventsWithinBounds(fast.stats)) {
      ++bad_events;
    }
    const std::int64_t n = net.num_vertices();
    if (fast.stats.updates_max_per_big_iteration > 10 * n) ++bad_iteration;
    if (fast.stats.updates_max_per_big_iteration * worst_ratio_den >
        worst_ratio_num * n) {
      worst_ratio_num = fast.stats.updates_max_per_big_iteration;
      worst_ratio_den = n;
    }
    fallback += fast.stats.fallback_updates;
    updates += fast.stats.updates_total;
  }
  const double secs = Seconds(start);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "500 instances, %d with an unstable or non-flow output, "
                "%.2f s (limit 60 s)",
                bad_output, secs);
  Report(1, "existence and solver correctness", bad_output == 0 && secs < 60,
         buf);
  std::snprintf(buf, sizeof buf,
                "%d runs exceed 1 saturation / 1 freeing / 2 gamma additions "
                "on some edge",
                bad_events);
  Report(4, "per-edge event bounds", bad_events == 0, buf);

  // the complexity family
  int family_iteration = 0;
  bool family_total_ok = true;
  std::string totals;
  for (int n : {20, 40, 80}) {
    std::int64_t worst_total = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RandomNetworkParams p;
      p.num_vertices = n;
      p.num_edges = 4 * n;
      p.max_capacity = 10;
      p.seed = 1000 + seed;
      const Network net = RandomNetwork(p);
      const SolveResult fast = RunFast(net);
      if (!Stable(net, fast.flow.values())) family_total_ok = false;
      if (fast.stats.updates_max_per_big_iteration > 10 * n) ++family_iteration;
      worst_total = std::max(worst_total, fast.stats.updates_total);
      if (fast.stats.updates_total > 20LL * n * 4 * n) family_total_ok = false;
      fallback += fast.stats.fallback_updates;
      updates += fast.stats.updates_total;
    }
    totals += " n=" + std::to_string(n) + ":" + std::to_string(worst_total) +
              "/" + std::to_string(20LL * n * 4 * n);
  }
  const double fraction =
      updates == 0 ? 0.0 : static_cast<double>(fallback) / updates;
  std::snprintf(buf, sizeof buf,
                "runs over 10n per big iteration: sweep %d, family %d; worst "
                "%lld/n=%lld; max total vs 20nm:%s; fallback fraction %.3f "
                "(diagnostic, target < 0.2)",
                bad_iteration, family_iteration,
                static_cast<long long>(worst_ratio_num),
                static_cast<long long>(worst_ratio_den), totals.c_str(),
                fraction);
  Report(5, "fast solver update counts",
         bad_iteration == 0 && family_iteration == 0 && family_total_ok, buf);
}

void OracleSweep() {
  std::int64_t assignments = 0, mismatches = 0, outside = 0, stable_flows = 0;
  std::int64_t pairs = 0, disagree = 0, lattice_bad = 0, mixed = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Network net = RandomTinyNetwork(seed);
    const int m = net.num_edges();
    for (const StabilityMode& mode :
         {StabilityMode::Flow(), StabilityMode::Preflow()}) {
      std::vector<Amount> f(m, 0);
      while (true) {
        if (InModeClass(net, f, mode)) {
          ++assignments;
          if (FindWitness(net, f, mode).has_value() ==
              StableByDefinition(net, f, mode)) {
            ++mismatches;
          }
        }
        int e = m - 1;
        while (e >= 0 && f[e] == net.capacity(e)) f[e--] = 0;
        if (e < 0) break;
        ++f[e];
      }
    }
    const StableSet set = EnumerateStable(net, StabilityMode::Flow());
    stable_flows += static_cast<std::int64_t>(set.size());
    if (set.size() == 0) ++outside;
    if (!set.contains(RunBasic(net).flow.values())) ++outside;
    if (!set.contains(RunFast(net).flow.values())) ++outside;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i; j < set.size(); ++j) {
        const auto& f = set.members[i];
        const auto& g = set.members[j];
        ++pairs;
        if (!TerminalAgreement(net, f, g)) {
          ++disagree;
          continue;
        }
        try {
          const JoinMeetResult a = JoinMeet(net, f, g);
          const JoinMeetResult b = JoinMeet(net, g, f);
          bool ok = set.contains(a.join) && set.contains(a.meet) &&
                    a.join == b.join && a.meet == b.meet;
          if (i == j) ok = ok && a.join == f && a.meet == f;
          ok = ok && JoinMeet(net, f, a.meet).join == f &&
               JoinMeet(net, f, a.join).meet == f;
          if (!ok) ++lattice_bad;
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kMixedOrientation) ++mixed;
          ++lattice_bad;
        }
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "200 instances, %lld mode-feasible assignments, %lld verifier "
                "mismatches, %lld solver outputs outside the stable set",
                static_cast<long long>(assignments),
                static_cast<long long>(mismatches),
                static_cast<long long>(outside));
  Report(2, "oracle equivalence", mismatches == 0 && outside == 0, buf);
  std::snprintf(buf, sizeof buf,
                "%lld stable flows, %lld pairs: %lld terminal disagreements, "
                "%lld lattice-law failures, %lld mixed orientations",
                static_cast<long long>(stable_flows),
                static_cast<long long>(pairs),
                static_cast<long long>(disagree),
                static_cast<long long>(lattice_bad),
                static_cast<long long>(mixed));
  Report(8, "terminal agreement and lattice laws",
         disagree == 0 && lattice_bad == 0 && mixed == 0, buf);
}

void IntegralitySweep() {
  int bad = 0;
  std::int64_t steps = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network net = SweepInstance(seed + 5000);
    std::vector<TraceEntry> tb, tf;
    BasicSolver basic(net);
    basic.set_trace(&tb);
    const SolveResult rb = basic.Run();
    FastSolver fast(net);
    fast.set_trace(&tf);
    const SolveResult rf = fast.Run();
    if (!Replays(net, tb, rb.flow.values()) ||
        !Replays(net, tf, rf.flow.values())) {
      ++bad;
    }
    steps += static_cast<std::int64_t>(tb.size() + tf.size());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "50 instances, %lld integer updates replayed, %d replays "
                "leave [0, c] or miss the output",
                static_cast<long long>(steps), bad);
  Report(3, "integrality", bad == 0, buf);
}

Network Net3(Amount c, Amount wt) {
  NetworkSpec spec;
  spec.num_vertices = 5;
  spec.sources = {0};
  spec.sinks = {4};
  spec.edges = {{0, 1, c}, {1, 2, c}, {2, 3, c}, {1, 3, c}, {3, 4, wt}};
  spec.in_pref = {{}, {0}, {1}, {3, 2}, {}};
  spec.out_pref = {{}, {1, 3}, {2}, {4}, {}};
  return Network::Build(spec);
}

void CycleRegression() {
  const Network net = Net3(5, 2);
  const SolveResult basic = RunBasic(net);
  const std::vector<Amount> pinned{2, 0, 0, 2, 2};
  const bool net3_ok =
      ValueOf(basic.flow) == 2 &&
      std::equal(pinned.begin(), pinned.end(), basic.flow.values().begin());
  const Network cycling = Net3(1000, 999);
  const SolveResult fast = RunFast(cycling);
  const SolveResult slow = RunBasic(cycling);
  const bool cycle_ok = fast.stats.updates_total <= 10 * 5 &&
                        Stable(cycling, fast.flow.values());
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "Net3 value %lld; cycling fixture: fast %lld updates "
                "(limit 50, %lld cycle cancellations), basic %lld",
                static_cast<long long>(ValueOf(basic.flow)),
                static_cast<long long>(fast.stats.updates_total),
                static_cast<long long>(fast.stats.cycles_cancelled),
                static_cast<long long>(slow.stats.updates_total));
  Report(6, "cycle regression", net3_ok && cycle_ok, buf);
}

void QuasiflowSweep() {
  int bounds_bad = 0, unstable = 0, both_positive = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Network net = SweepInstance(seed + 9000);
    const ExcessBounds b = RandomBounds(net, 3, seed);
    for (StabilityKind kind :
         {StabilityKind::kGammaPreflow, StabilityKind::kQuasiflow}) {
      const QuasiflowResult r = SolveQuasiflow(net, b, kind);
      const bool quasi = kind == StabilityKind::kQuasiflow;
      const auto x = ComputeExcesses(net, r.values);
      for (VertexId v = 0; v < net.num_vertices(); ++v) {
        if (!net.is_internal(v)) continue;
        const Amount low = quasi ? -b.beta[v] : 0;
        if (x[v] < low || x[v] > b.gamma[v]) ++bounds_bad;
      }
      const StabilityMode mode = quasi ? StabilityMode::Quasiflow(b)
                                       : StabilityMode::GammaPreflow(b);
      if (FindWitness(net, r.values, mode)) ++unstable;
      if (!quasi) continue;
      const Reduction red = ReduceBetaGamma(net, b);
      for (VertexId v = 0; v < net.num_vertices(); ++v) {
        if (!net.is_internal(v)) continue;
        const EdgeId ge = red.mapping.gamma_edge[v];
        const EdgeId be = red.mapping.beta_edge[v];
        if (ge != kNoEdge && be != kNoEdge && r.reduced[ge] > 0 &&
            r.reduced[be] > 0) {
          ++both_positive;
        }
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "200 instances x 2 modes: %d excess-bound violations, %d "
                "unstable, %d vertices with both auxiliary edges positive",
                bounds_bad, unstable, both_positive);
  Report(7, "bounded-excess variants",
         bounds_bad == 0 && unstable == 0 && both_positive == 0, buf);
}

void CompletionSweep() {
  int bad = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Network net = SweepInstance(seed + 20000);
    BasicSolver s(net);
    s.InitialIteration();
    const std::vector<Amount> pre(s.flow().values().begin(),
                                  s.flow().values().end());
    try {
      const auto done = CompletePreflow(net, pre);
      bool ok = Stable(net, done);
      for (VertexId t : net.sinks()) {
        for (EdgeId e : net.in_edges(t)) ok = ok && done[e] >= pre[e];
      }
      if (!ok) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  Report(9, "preflow completion", bad == 0,
         "100 instances, " + std::to_string(bad) +
             " completions unstable, failed, or lower on a sink edge");
}

}  // namespace
}  // namespace stableflow

int main() {
  using namespace stableflow;
  SolverSweep();
  OracleSweep();
  IntegralitySweep();
  CycleRegression();
  QuasiflowSweep();
  CompletionSweep();
  for (const auto& [id, line] : lines) std::puts(line.c_str());
  return failures == 0 ? 0 : 1;
}
