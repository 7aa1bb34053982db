#include <doctest.h>

#include "fixtures.h"
#include "stableflow/error.h"
#include "stableflow/network.h"

namespace stableflow {
namespace {

using testing::Net1;
using testing::Net2;
using testing::Net3;

ErrorCode BuildError(const NetworkSpec& spec) {
  try {
    Network::Build(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("build accepted an invalid NetworkSpec");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("fixtures build") {
  const Network n1 = Net1();
  CHECK(n1.num_vertices() == 2);
  CHECK(n1.num_edges() == 1);
  CHECK(n1.is_source(0));
  CHECK(n1.is_sink(1));

  const Network n3 = Net3();
  CHECK(n3.out_edges(testing::kU)[0] == testing::kUV);
  CHECK(n3.out_rank(testing::kUW) == 1);
  CHECK(n3.in_rank(testing::kUW) == 0);
  CHECK(n3.in_rank(testing::kVW) == 1);
  CHECK(n3.total_capacity() == 22);
}

TEST_CASE("validation errors") {
  NetworkSpec base = Net2().ToSpec();

  NetworkSpec into_source = base;
  into_source.edges.push_back({1, 0, 1});
  into_source.in_pref[1].clear();
  into_source.out_pref[1] = {1, 2};
  CHECK(BuildError(into_source) == ErrorCode::kEdgeIntoSource);

  NetworkSpec out_of_sink = base;
  out_of_sink.edges.push_back({2, 1, 1});
  out_of_sink.in_pref[1] = {0, 2};
  CHECK(BuildError(out_of_sink) == ErrorCode::kEdgeOutOfSink);

  NetworkSpec loop = base;
  loop.edges[1] = {1, 1, 2};
  CHECK(BuildError(loop) == ErrorCode::kSelfLoop);

  NetworkSpec parallel = base;
  parallel.edges.push_back({0, 1, 1});
  parallel.in_pref[1] = {0, 2};
  CHECK(BuildError(parallel) == ErrorCode::kDuplicateEdge);

  NetworkSpec big = base;
  big.edges[0].capacity = kMaxCapacity + 1;
  CHECK(BuildError(big) == ErrorCode::kCapacityOutOfRange);
  big.edges[0].capacity = -1;
  CHECK(BuildError(big) == ErrorCode::kCapacityOutOfRange);

  NetworkSpec overlap = base;
  overlap.sinks = {0, 2};
  CHECK(BuildError(overlap) == ErrorCode::kTerminalOverlap);

  NetworkSpec bad_pref = base;
  bad_pref.out_pref[1] = {0};
  CHECK(BuildError(bad_pref) == ErrorCode::kBadPreferencePermutation);
  bad_pref.out_pref[1] = {};
  CHECK(BuildError(bad_pref) == ErrorCode::kBadPreferencePermutation);

  NetworkSpec terminal_pref = base;
  terminal_pref.out_pref[0] = {0};
  CHECK(BuildError(terminal_pref) == ErrorCode::kPreferenceListOnTerminal);
}

TEST_CASE("capacity 2^31 is accepted") {
  NetworkSpec spec = Net1().ToSpec();
  spec.edges[0].capacity = kMaxCapacity;
  CHECK(Network::Build(spec).capacity(0) == kMaxCapacity);
}

TEST_CASE("NetworkSpec round trip") {
  const Network n3 = Net3();
  CHECK(Network::Build(n3.ToSpec()) == n3);
  CHECK_FALSE(Network::Build(Net3(6).ToSpec()) == n3);
}

TEST_CASE("allocation reduction") {
  AllocationInstance a;
  a.num_left = 2;
  a.num_right = 1;
  a.edges = {{0, 2, 1}, {1, 2, 2}};
  a.quota = {1, 2, 2};
  a.preference = {{0}, {1}, {1, 0}};
  const Network net = FromAllocation(a);
  CHECK(net.num_vertices() == 5);
  CHECK(net.num_edges() == 5);
  CHECK(net.is_source(3));
  CHECK(net.is_sink(4));
  // s->left edges first, then right->t edges
  CHECK(net.tail(2) == 3);
  CHECK(net.head(4) == 4);
  CHECK(net.capacity(4) == 2);
  CHECK(net.in_edges(2)[0] == 1);

  a.edges[0] = {0, 1, 1};
  CHECK_THROWS_AS(FromAllocation(a), Error);
}

TEST_CASE("random networks are reproducible and legal") {
  RandomNetworkParams p;
  p.num_vertices = 12;
  p.num_edges = 40;
  p.max_capacity = 9;
  p.num_sources = 2;
  p.num_sinks = 3;
  p.seed = 11;
  const Network a = RandomNetwork(p);
  CHECK(a == RandomNetwork(p));
  CHECK(a.num_edges() == 40);
  for (const Edge& e : a.edges()) {
    CHECK_FALSE(a.is_source(e.head));
    CHECK_FALSE(a.is_sink(e.tail));
    CHECK(e.capacity <= 9);
  }
  p.seed = 12;
  CHECK_FALSE(a == RandomNetwork(p));

  p.num_edges = LegalPairCount(12, 2, 3) + 1;
  CHECK_THROWS_AS(RandomNetwork(p), Error);
  p.num_edges = LegalPairCount(12, 2, 3);
  CHECK(RandomNetwork(p).num_edges() == p.num_edges);
}

}  // namespace
}  // namespace stableflow
