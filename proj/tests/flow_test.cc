#include <doctest.h>

#include "fixtures.h"
#include "stableflow/flow.h"

namespace stableflow {
namespace {

using testing::Net1;
using testing::Net2;
using testing::Net3;

TEST_CASE("excess") {
  const Network n1 = Net1();
  const std::vector<Amount> f1{5};
  const auto x1 = ComputeExcesses(n1, f1);
  CHECK(x1[0] == -5);
  CHECK(x1[1] == 5);

  const Network n2 = Net2();
  CHECK(ComputeExcesses(n2, std::vector<Amount>{3, 3})[1] == 0);

  const Network n3 = Net3();
  const std::vector<Amount> f3{2, 0, 0, 2, 2};
  const auto x3 = ComputeExcesses(n3, f3);
  CHECK(x3[1] == 0);
  CHECK(x3[2] == 0);
  CHECK(x3[3] == 0);
  CHECK(x3[4] == 2);
}

TEST_CASE("classify") {
  const Network n2 = Net2();
  CHECK(Classify(n2, std::vector<Amount>{3, 3}) == FlowClass::kFlow);
  CHECK(Classify(n2, std::vector<Amount>{3, 1}) == FlowClass::kPreflow);
  CHECK(Classify(n2, std::vector<Amount>{1, 3}) == FlowClass::kFeasibleOnly);
  CHECK(Classify(n2, std::vector<Amount>{4, 3}) == FlowClass::kInfeasible);
  CHECK(Classify(n2, std::vector<Amount>{-1, 0}) == FlowClass::kInfeasible);
  CHECK(FlowClassName(FlowClass::kPreflow) == "Preflow");
}

TEST_CASE("value") {
  CHECK(ValueOf(Net1(), std::vector<Amount>{5}) == 5);
  CHECK(ValueOf(Net3(), std::vector<Amount>{2, 0, 0, 2, 2}) == 2);
}

TEST_CASE("assignment keeps its excess cache") {
  const Network n3 = Net3();
  FlowAssignment f(n3);
  f.Set(testing::kSU, 5);
  f.Add(testing::kUV, 5);
  f.Add(testing::kUV, -2);
  CHECK(f.excess(testing::kU) == 2);
  CHECK(f.excess(testing::kV) == 3);
  CHECK(f.middle(testing::kUV));
  CHECK(f.saturated(testing::kSU));
  CHECK(f.free(testing::kUW));
  CHECK(f.residual(testing::kUV) == 2);
  CHECK(f.ExcessCacheConsistent());
  CHECK(Classify(f) == FlowClass::kPreflow);
}

}  // namespace
}  // namespace stableflow
