#include "stableflow/lattice.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "stableflow/basic_solver.h"
#include "stableflow/error.h"
#include "stableflow/stability.h"

namespace stableflow {
namespace {

void RequireSize(const Network& net, std::span<const Amount> f,
                 std::span<const Amount> g) {
  if (static_cast<int>(f.size()) != net.num_edges() ||
      static_cast<int>(g.size()) != net.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow size does not match the edge count");
  }
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

enum Orientation : unsigned { kLeft = 1, kRight = 2 };

// Order evidence of the A and B edges of component k in `edges` (a
// preference list). `a_first` is the orientation meaning "A before B".
unsigned ListEvidence(std::span<const EdgeId> edges,
                      const DiffDecomposition& dec, int k, unsigned a_first) {
  const unsigned b_first = a_first == kLeft ? kRight : kLeft;
  int last_a = -1, first_a = -1, last_b = -1, first_b = -1;
  for (int r = 0; r < static_cast<int>(edges.size()); ++r) {
    const EdgeId e = edges[r];
    if (dec.component[e] != k) continue;
    if (dec.in_a[e]) {
      if (first_a < 0) first_a = r;
      last_a = r;
    } else {
      if (first_b < 0) first_b = r;
      last_b = r;
    }
  }
  if (first_a < 0 || first_b < 0) return 0;
  if (last_a < first_b) return a_first;
  if (last_b < first_a) return b_first;
  return a_first | b_first;
}

}  // namespace

bool TerminalAgreement(const Network& net, std::span<const Amount> f,
                       std::span<const Amount> g) {
  RequireSize(net, f, g);
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if ((net.is_terminal(net.tail(e)) || net.is_terminal(net.head(e))) &&
        f[e] != g[e]) {
      return false;
    }
  }
  return true;
}

std::string_view ComponentTypeName(ComponentType t) {
  switch (t) {
    case ComponentType::kA: return "A";
    case ComponentType::kB: return "B";
    case ComponentType::kL: return "L";
    case ComponentType::kR: return "R";
  }
  return "?";
}

DiffDecomposition DecomposeDifference(const Network& net,
                                      std::span<const Amount> f,
                                      std::span<const Amount> g) {
  RequireSize(net, f, g);
  if (!TerminalAgreement(net, f, g)) {
    throw Error(ErrorCode::kNotACirculation,
                "the flows differ on a terminal edge");
  }
  const int n = net.num_vertices();
  const int m = net.num_edges();
  DiffDecomposition dec;
  dec.in_a.assign(m, 0);
  dec.in_b.assign(m, 0);
  dec.omega.assign(m, 0);
  dec.component.assign(m, -1);

  // Reoriented adjacency: A edges tail->head, B edges head->tail.
  std::vector<std::vector<EdgeId>> out(n);
  std::vector<Amount> balance(n, 0);
  auto from = [&](EdgeId e) { return dec.in_a[e] ? net.tail(e) : net.head(e); };
  auto to = [&](EdgeId e) { return dec.in_a[e] ? net.head(e) : net.tail(e); };
  for (EdgeId e = 0; e < m; ++e) {
    if (f[e] == g[e]) continue;
    dec.in_a[e] = f[e] > g[e];
    dec.in_b[e] = g[e] > f[e];
    dec.omega[e] = f[e] > g[e] ? f[e] - g[e] : g[e] - f[e];
    out[from(e)].push_back(e);
    balance[from(e)] -= dec.omega[e];
    balance[to(e)] += dec.omega[e];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (balance[v] != 0) {
      throw Error(ErrorCode::kNotACirculation,
                  "difference is unbalanced at vertex " + std::to_string(v));
    }
  }

  std::vector<Amount> left = dec.omega;
  std::vector<std::size_t> cursor(n, 0);
  auto next_edge = [&](VertexId x) {
    while (cursor[x] < out[x].size() && left[out[x][cursor[x]]] == 0) {
      ++cursor[x];
    }
    return cursor[x] < out[x].size() ? out[x][cursor[x]] : kNoEdge;
  };
  std::vector<int> pos(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    while (next_edge(s) != kNoEdge) {
      std::vector<VertexId> path{s};
      std::vector<EdgeId> edges;
      pos[s] = 0;
      VertexId x = s;
      while (true) {
        const EdgeId e = next_edge(x);
        // Balance guarantees an exit from every vertex entered.
        edges.push_back(e);
        x = to(e);
        if (pos[x] >= 0) break;
        pos[x] = static_cast<int>(path.size());
        path.push_back(x);
      }
      DiffCycle cycle;
      cycle.start = x;
      cycle.weight = kMaxCapacity;
      for (std::size_t i = pos[x]; i < edges.size(); ++i) {
        cycle.steps.push_back({edges[i], dec.in_a[edges[i]] != 0});
        cycle.weight = std::min(cycle.weight, left[edges[i]]);
      }
      for (const DiffCycle::Step& st : cycle.steps) left[st.edge] -= cycle.weight;
      for (VertexId v : path) pos[v] = -1;
      dec.cycles.push_back(std::move(cycle));
    }
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (EdgeId e = 0; e < m; ++e) {
    if (dec.omega[e] == 0) continue;
    parent[Find(parent, net.tail(e))] = Find(parent, net.head(e));
  }
  std::vector<int> index(n, -1);
  for (EdgeId e = 0; e < m; ++e) {
    if (dec.omega[e] == 0) continue;
    const int root = Find(parent, net.tail(e));
    if (index[root] < 0) index[root] = dec.num_components++;
    dec.component[e] = index[root];
  }
  return dec;
}

const std::vector<ComponentType>& ClassifyComponents(const Network& net,
                                                     DiffDecomposition& dec) {
  const int k = dec.num_components;
  std::vector<char> has_a(k, 0), has_b(k, 0);
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (dec.component[e] < 0) continue;
    (dec.in_a[e] ? has_a : has_b)[dec.component[e]] = 1;
  }
  std::vector<unsigned> evidence(k, 0);
  for (const DiffCycle& cycle : dec.cycles) {
    const std::size_t len = cycle.steps.size();
    for (std::size_t i = 0; i < len; ++i) {
      const DiffCycle::Step& arrive = cycle.steps[(i + len - 1) % len];
      const DiffCycle::Step& depart = cycle.steps[i];
      if (arrive.forward == depart.forward) continue;
      // A then B: both enter the vertex. B then A: both leave it.
      const bool left = arrive.forward
                            ? net.in_rank(arrive.edge) < net.in_rank(depart.edge)
                            : net.out_rank(arrive.edge) <
                                  net.out_rank(depart.edge);
      evidence[dec.component[depart.edge]] |= left ? kLeft : kRight;
    }
  }
  for (int c = 0; c < k; ++c) {
    if (!has_a[c] || !has_b[c] || evidence[c] != 0) continue;
    for (VertexId v = 0; v < net.num_vertices(); ++v) {
      if (!net.is_internal(v)) continue;
      evidence[c] |= ListEvidence(net.in_edges(v), dec, c, kLeft);
      evidence[c] |= ListEvidence(net.out_edges(v), dec, c, kRight);
    }
  }
  dec.types.assign(k, ComponentType::kA);
  for (int c = 0; c < k; ++c) {
    if (!has_b[c]) continue;
    if (!has_a[c]) {
      dec.types[c] = ComponentType::kB;
      continue;
    }
    if (evidence[c] == (kLeft | kRight)) {
      throw Error(ErrorCode::kMixedOrientation,
                  "component " + std::to_string(c) +
                      " has both left and right special vertices");
    }
    dec.types[c] = evidence[c] == kRight ? ComponentType::kR : ComponentType::kL;
  }
  return dec.types;
}

JoinMeetResult JoinMeet(const Network& net, std::span<const Amount> f,
                        std::span<const Amount> g) {
  DiffDecomposition dec = DecomposeDifference(net, f, g);
  ClassifyComponents(net, dec);
  JoinMeetResult r{{f.begin(), f.end()}, {f.begin(), f.end()}};
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (dec.component[e] < 0) continue;
    const ComponentType t = dec.types[dec.component[e]];
    const bool h_takes_f = t == ComponentType::kA || t == ComponentType::kR;
    r.join[e] = h_takes_f ? f[e] : g[e];
    r.meet[e] = h_takes_f ? g[e] : f[e];
  }
  return r;
}

bool Dominates(std::span<const EdgeId> order, std::span<const Amount> a,
               std::span<const Amount> b) {
  const int k = static_cast<int>(order.size());
  // prefix_ge[i]: a >= b on order[0..i); suffix_le[i]: a <= b on order(i..].
  std::vector<char> prefix_ge(k + 1, 1), suffix_le(k + 1, 1);
  bool equal = true;
  for (int i = 0; i < k; ++i) {
    const EdgeId e = order[i];
    prefix_ge[i + 1] = prefix_ge[i] && a[e] >= b[e];
    equal = equal && a[e] == b[e];
  }
  if (equal) return true;
  for (int i = k - 1; i >= 0; --i) {
    suffix_le[i] = suffix_le[i + 1] && a[order[i]] <= b[order[i]];
  }
  for (int i = 0; i < k; ++i) {
    const EdgeId e = order[i];
    if (a[e] > b[e] && prefix_ge[i] && suffix_le[i + 1]) return true;
  }
  return false;
}

std::vector<Amount> CompletePreflow(const Network& net,
                                    std::span<const Amount> f) {
  const StabilityMode mode = StabilityMode::Preflow();
  if (FindWitness(net, f, mode)) {
    throw Error(ErrorCode::kModeMismatch, "preflow is not stable");
  }
  const int n = net.num_vertices();
  const int m = net.num_edges();
  const std::vector<Amount> excess = ComputeExcesses(net, f);
  auto unsaturated = [&](EdgeId e) { return f[e] < net.capacity(e); };

  // Unsaturated walks that start non-dominated: their edges get closed and
  // the vertices they reach count as balanced.
  std::vector<char> reached(n, 0);
  std::vector<char> closed(m, 0);
  std::deque<VertexId> queue;
  for (EdgeId e = 0; e < m; ++e) {
    if (!unsaturated(e) || !StartEligible(net, f, excess, e, mode)) continue;
    closed[e] = 1;
    const VertexId v = net.head(e);
    if (!reached[v]) {
      reached[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : net.out_edges(x)) {
      if (!unsaturated(e)) continue;
      closed[e] = 1;
      const VertexId y = net.head(e);
      if (!reached[y]) {
        reached[y] = 1;
        queue.push_back(y);
      }
    }
  }

  SolverState state(net);
  for (EdgeId e = 0; e < m; ++e) state.flow.Set(e, f[e]);
  for (VertexId v = 0; v < n; ++v) {
    if (!net.is_internal(v) || !reached[v]) continue;
    const auto in = net.in_edges(v);
    std::size_t r = 0;
    while (r < in.size() && !(closed[in[r]] && unsaturated(in[r]))) ++r;
    state.critical[v] = in[r];
    for (; r < in.size(); ++r) closed[in[r]] = 1;
  }
  state.closed = closed;
  for (VertexId u = 0; u < n; ++u) {
    if (!net.is_internal(u) || reached[u]) continue;
    for (EdgeId e : net.out_edges(u)) {
      if (!closed[e] && unsaturated(e)) {
        state.active[u] = e;
        break;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!net.is_internal(v) || excess[v] <= 0) continue;
    if (state.active[v] != kNoEdge) {
      state.in_new_queue[v] = 1;
      state.new_queue.push_back(v);
    } else {
      state.in_excess_queue[v] = 1;
      state.excess_queue.push_back(v);
    }
  }

  BasicSolver solver(net, std::move(state));
  std::string why;
  if (!solver.CheckInvariants(&why)) {
    throw Error(ErrorCode::kStateReconstructionFailed, why);
  }
  solver.RunToCompletion();
  const FlowAssignment& out = solver.flow();
  if (Classify(out) != FlowClass::kFlow ||
      FindWitness(out, StabilityMode::Flow())) {
    throw Error(ErrorCode::kStateReconstructionFailed,
                "completed assignment is not a stable flow");
  }
  return {out.values().begin(), out.values().end()};
}

}  // namespace stableflow
