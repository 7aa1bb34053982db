#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"

namespace stableflow {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stableflow");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return (fs::path(STABLEFLOW_DATA_DIR) / name).string();
}

std::string Scratch(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("stableflow_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

TEST_CASE("solve") {
  const Run fast = Cli({"solve", "--fast", Data("net3.sf")});
  CHECK(fast.code == kExitOk);
  CHECK(fast.out.find("value 2") != std::string::npos);
  CHECK(fast.out.find("f 3 2") != std::string::npos);
  const Run basic = Cli({"solve", "--basic", Data("net3.sf")});
  CHECK(basic.out == fast.out);
  CHECK(Cli({"solve", Data("net3.sf")}).out == fast.out);
}

TEST_CASE("stats and trace go to stderr") {
  const Run r = Cli({"solve", "--stats", Data("net3.sf")});
  const auto j = nlohmann::json::parse(r.err);
  for (const char* key : {"big_iterations", "updates_total",
                          "updates_max_per_big_iteration", "s_events",
                          "f_events", "m_events"}) {
    CHECK(j.contains(key));
  }
  CHECK(Cli({"solve", "--stats", Data("net3.sf")}).err == r.err);

  const Run t = Cli({"solve", "--basic", "--trace", Data("net3.sf")});
  CHECK(t.err.rfind("u 0 5 init\n", 0) == 0);
  CHECK(std::count(t.err.begin(), t.err.end(), '\n') == 11);
}

TEST_CASE("verify") {
  const std::string good = Scratch("good.flow", "f 0 2\nf 1 0\nf 2 0\nf 3 2\nf 4 2\n");
  const Run ok = Cli({"verify", "--mode", "flow", Data("net3.sf"), good});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "STABLE\n");

  const std::string bad = Scratch("bad.flow", "f 0 2\nf 1 2\nf 2 2\nf 3 0\nf 4 2\n");
  const Run no = Cli({"verify", Data("net3.sf"), bad});
  CHECK(no.code == kExitUnstable);
  CHECK(no.out == "UNSTABLE 0 3\n");

  const Run wrong_mode = Cli({"verify", "--mode", "flow", Data("quasi.sf"),
                              Scratch("pre.flow", "f 0 3\nf 1 2\n")});
  CHECK(wrong_mode.code == kExitError);
}

TEST_CASE("gamma and quasi solve") {
  const Run g = Cli({"solve", "--gamma", Data("quasi.sf")});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("x 1 1") != std::string::npos);
  const Run q = Cli({"solve", "--quasi", Data("quasi.sf")});
  CHECK(q.code == kExitOk);
}

TEST_CASE("gen is deterministic") {
  const Run a = Cli({"gen", "--n", "30", "--m", "120", "--seed", "7"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == Cli({"gen", "--n", "30", "--m", "120", "--seed", "7"}).out);
  CHECK(a.out != Cli({"gen", "--n", "30", "--m", "120", "--seed", "8"}).out);
  const Run s = Cli({"solve", Scratch("gen.sf", a.out)});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("class Flow") != std::string::npos);

  const Run bounded = Cli({"gen", "--n", "10", "--m", "30", "--bounds", "3"});
  CHECK(bounded.out.find("\ng ") != std::string::npos);
  CHECK(Cli({"gen", "--n", "3", "--m", "50"}).code == kExitUsage);
}

TEST_CASE("oracle, lattice, reduce, crosscheck") {
  const Run o = Cli({"oracle", Data("net4.sf")});
  CHECK(o.out == "stable 2\na 1 0 0\na 1 1 1\n");
  CHECK(Cli({"oracle", "--serial", Data("net4.sf")}).out == o.out);

  const std::string f = Scratch("f.flow", "f 0 1\nf 1 1\nf 2 1\n");
  const std::string g = Scratch("g.flow", "f 0 1\nf 1 0\nf 2 0\n");
  const Run join = Cli({"lattice", "join", Data("net4.sf"), f, g});
  CHECK(join.out.find("f 1 1\nf 2 1") != std::string::npos);
  const Run meet = Cli({"lattice", "meet", Data("net4.sf"), f, g});
  CHECK(meet.out.find("f 1 0\nf 2 0") != std::string::npos);

  const Run sa = Cli({"reduce", "sa", Data("sa.txt")});
  CHECK(sa.code == kExitOk);
  CHECK(sa.out.rfind("p stableflow 6 7\n", 0) == 0);
  const Run rg = Cli({"reduce", "gamma", Data("quasi.sf")});
  CHECK(rg.out.find("t 2 3") != std::string::npos);

  const Run cc = Cli({"crosscheck", "--seeds", "0..30"});
  CHECK(cc.code == kExitOk);
  CHECK(cc.out.find("instances 31 failed 0") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
  CHECK(Cli({}).code == kExitUsage);
  CHECK(Cli({"solve"}).code == kExitUsage);
  CHECK(Cli({"solve", "--basic", "--fast", Data("net3.sf")}).code ==
        kExitUsage);
  CHECK(Cli({"verify", "--mode", "loose", Data("net3.sf"), "x"}).code ==
        kExitUsage);
  const Run broken = Cli({"solve", Scratch("broken.sf", "p stableflow 2\n")});
  CHECK(broken.code == kExitUsage);
  CHECK(broken.err.find("line 1") != std::string::npos);
  CHECK(Cli({"solve", "/nonexistent/file.sf"}).code == kExitError);
  CHECK(Cli({"--help"}).code == kExitOk);
}

}  // namespace
}  // namespace stableflow
