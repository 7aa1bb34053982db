#ifndef STABLEFLOW_TESTS_FIXTURES_H_
#define STABLEFLOW_TESTS_FIXTURES_H_

#include <vector>

#include "stableflow/network.h"

namespace stableflow::testing {

inline Network Net1() {
  NetworkSpec spec;
  spec.num_vertices = 2;
  spec.sources = {0};
  spec.sinks = {1};
  spec.edges = {{0, 1, 5}};
  return Network::Build(spec);
}

// s=0 v=1 t=2; sv, vt
inline Network Net2(Amount sv = 3, Amount vt = 7) {
  NetworkSpec spec;
  spec.num_vertices = 3;
  spec.sources = {0};
  spec.sinks = {2};
  spec.edges = {{0, 1, sv}, {1, 2, vt}};
  spec.in_pref = {{}, {0}, {}};
  spec.out_pref = {{}, {1}, {}};
  return Network::Build(spec);
}

// s=0 u=1 v=2 w=3 t=4; edges su uv vw uw wt.
// u prefers uv over uw, w prefers uw over vw.
enum Net3Edge : EdgeId { kSU = 0, kUV = 1, kVW = 2, kUW = 3, kWT = 4 };
inline constexpr VertexId kU = 1, kV = 2, kW = 3;

inline Network Net3(Amount c = 5, Amount wt = 2) {
  NetworkSpec spec;
  spec.num_vertices = 5;
  spec.sources = {0};
  spec.sinks = {4};
  spec.edges = {{0, 1, c}, {1, 2, c}, {2, 3, c}, {1, 3, c}, {3, 4, wt}};
  spec.in_pref = {{}, {kSU}, {kUV}, {kUW, kVW}, {}};
  spec.out_pref = {{}, {kUV, kUW}, {kVW}, {kWT}, {}};
  return Network::Build(spec);
}

// s=0 t=1 a=2 b=3; st, ab, ba
inline Network Net4() {
  NetworkSpec spec;
  spec.num_vertices = 4;
  spec.sources = {0};
  spec.sinks = {1};
  spec.edges = {{0, 1, 1}, {2, 3, 1}, {3, 2, 1}};
  spec.in_pref = {{}, {}, {2}, {1}};
  spec.out_pref = {{}, {}, {1}, {2}};
  return Network::Build(spec);
}

inline std::vector<Amount> Values(std::span<const Amount> v) {
  return {v.begin(), v.end()};
}

}  // namespace stableflow::testing

#endif  // STABLEFLOW_TESTS_FIXTURES_H_
