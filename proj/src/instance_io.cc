#include "stableflow/instance_io.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include "stableflow/error.h"

namespace stableflow {
namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-empty, comment-stripped line split into tokens.
  bool Next() {
    while (pos_ <= text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (const std::size_t hash = line.find('#'); hash != line.npos) {
        line = line.substr(0, hash);
      }
      tokens_.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && IsSpace(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !IsSpace(line[j])) ++j;
        if (j > i) tokens_.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens_.empty()) return true;
    }
    return false;
  }

  const std::vector<std::string_view>& tokens() const { return tokens_; }
  int line() const { return line_no_; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no_) + ": " + message);
  }

  std::int64_t Int(std::size_t i) const {
    if (i >= tokens_.size()) Fail("missing field");
    std::int64_t value = 0;
    const std::string_view t = tokens_[i];
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      Fail("expected an integer, got '" + std::string(t) + "'");
    }
    return value;
  }

  void Arity(std::size_t n) const {
    if (tokens_.size() != n) {
      Fail("'" + std::string(tokens_[0]) + "' takes " +
           std::to_string(n - 1) + " fields");
    }
  }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
  std::vector<std::string_view> tokens_;
};

}  // namespace

ParsedInstance ParseInstance(std::string_view text) {
  LineReader in(text);
  if (!in.Next()) {
    throw Error(ErrorCode::kParseError, "line 1: empty instance");
  }
  if (in.tokens().size() != 4 || in.tokens()[0] != "p" ||
      in.tokens()[1] != "stableflow") {
    in.Fail("expected 'p stableflow <n> <m>'");
  }
  const std::int64_t n = in.Int(2);
  const std::int64_t m = in.Int(3);
  if (n < 0 || m < 0 || n > (1 << 24) || m > (1 << 26)) {
    in.Fail("vertex or edge count out of range");
  }
  NetworkSpec spec;
  spec.num_vertices = static_cast<int>(n);
  spec.edges.resize(m);
  spec.in_pref.assign(n, {});
  spec.out_pref.assign(n, {});
  std::vector<char> edge_seen(m, 0), in_seen(n, 0), out_seen(n, 0);
  std::vector<char> g_seen(n, 0), b_seen(n, 0);
  std::vector<std::pair<VertexId, int>> g_lines, b_lines;
  ExcessBounds bounds{std::vector<Amount>(n, 0), std::vector<Amount>(n, 0)};
  bool has_gamma = false, has_beta = false;

  auto vertex = [&](std::size_t i) {
    const std::int64_t v = in.Int(i);
    if (v < 0 || v >= n) in.Fail("vertex " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v);
  };
  auto edge = [&](std::size_t i) {
    const std::int64_t e = in.Int(i);
    if (e < 0 || e >= m) in.Fail("edge " + std::to_string(e) + " out of range");
    return static_cast<EdgeId>(e);
  };

  while (in.Next()) {
    const auto& tok = in.tokens();
    const std::string_view kind = tok[0];
    if (kind == "s" || kind == "t") {
      auto& list = kind == "s" ? spec.sources : spec.sinks;
      for (std::size_t i = 1; i < tok.size(); ++i) list.push_back(vertex(i));
    } else if (kind == "e") {
      in.Arity(5);
      const EdgeId e = edge(1);
      if (edge_seen[e]) in.Fail("edge " + std::to_string(e) + " defined twice");
      edge_seen[e] = 1;
      spec.edges[e] = {vertex(2), vertex(3), in.Int(4)};
    } else if (kind == "in" || kind == "out") {
      if (tok.size() < 2) in.Fail("missing vertex");
      const VertexId v = vertex(1);
      auto& seen = kind == "in" ? in_seen : out_seen;
      if (seen[v]) {
        in.Fail("second '" + std::string(kind) + "' line for vertex " +
                std::to_string(v));
      }
      seen[v] = 1;
      auto& list = kind == "in" ? spec.in_pref[v] : spec.out_pref[v];
      for (std::size_t i = 2; i < tok.size(); ++i) list.push_back(edge(i));
    } else if (kind == "g" || kind == "b") {
      in.Arity(3);
      const VertexId v = vertex(1);
      const std::int64_t value = in.Int(2);
      if (value < 0) in.Fail("negative bound");
      auto& seen = kind == "g" ? g_seen : b_seen;
      if (seen[v]) in.Fail("second bound for vertex " + std::to_string(v));
      seen[v] = 1;
      (kind == "g" ? bounds.gamma : bounds.beta)[v] = value;
      (kind == "g" ? g_lines : b_lines).emplace_back(v, in.line());
      (kind == "g" ? has_gamma : has_beta) = true;
    } else if (kind == "p") {
      in.Fail("second problem line");
    } else {
      in.Fail("unknown record '" + std::string(kind) + "'");
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (!edge_seen[e]) {
      throw Error(ErrorCode::kParseError,
                  "edge " + std::to_string(e) + " is never defined");
    }
  }

  std::vector<char> terminal(n, 0);
  for (VertexId v : spec.sources) terminal[v] = 1;
  for (VertexId v : spec.sinks) terminal[v] = 1;
  for (const auto* lines : {&g_lines, &b_lines}) {
    for (const auto& [v, line] : *lines) {
      if (terminal[v]) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line) +
                        ": bound given for terminal vertex " +
                        std::to_string(v));
      }
    }
  }
  std::vector<int> in_degree(n, 0), out_degree(n, 0);
  for (const Edge& e : spec.edges) {
    ++out_degree[e.tail];
    ++in_degree[e.head];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (terminal[v]) continue;
    if (out_degree[v] > 0 && !out_seen[v]) {
      throw Error(ErrorCode::kParseError,
                  "vertex " + std::to_string(v) +
                      " has out-edges but no 'out' line");
    }
    if (in_degree[v] > 0 && !in_seen[v]) {
      throw Error(ErrorCode::kParseError,
                  "vertex " + std::to_string(v) +
                      " has in-edges but no 'in' line");
    }
  }
  Network net = Network::Build(std::move(spec));
  return {std::move(net), std::move(bounds), has_gamma, has_beta};
}

std::string SerializeInstance(const Network& net, const ExcessBounds* bounds) {
  std::ostringstream out;
  out << "p stableflow " << net.num_vertices() << ' ' << net.num_edges()
      << '\n';
  out << 's';
  for (VertexId v : net.sources()) out << ' ' << v;
  out << "\nt";
  for (VertexId v : net.sinks()) out << ' ' << v;
  out << '\n';
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    out << "e " << e << ' ' << net.tail(e) << ' ' << net.head(e) << ' '
        << net.capacity(e) << '\n';
  }
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v)) continue;
    if (!net.in_edges(v).empty()) {
      out << "in " << v;
      for (EdgeId e : net.in_edges(v)) out << ' ' << e;
      out << '\n';
    }
    if (!net.out_edges(v).empty()) {
      out << "out " << v;
      for (EdgeId e : net.out_edges(v)) out << ' ' << e;
      out << '\n';
    }
  }
  if (bounds != nullptr) {
    for (VertexId v = 0; v < net.num_vertices(); ++v) {
      if (v < static_cast<int>(bounds->gamma.size()) && bounds->gamma[v] != 0) {
        out << "g " << v << ' ' << bounds->gamma[v] << '\n';
      }
    }
    for (VertexId v = 0; v < net.num_vertices(); ++v) {
      if (v < static_cast<int>(bounds->beta.size()) && bounds->beta[v] != 0) {
        out << "b " << v << ' ' << bounds->beta[v] << '\n';
      }
    }
  }
  return out.str();
}

std::string SerializeFlow(const Network& net, std::span<const Amount> values,
                          bool with_excess) {
  std::ostringstream out;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    out << "f " << e << ' ' << values[e] << '\n';
  }
  out << "value " << ValueOf(net, values) << '\n';
  out << "class " << FlowClassName(Classify(net, values)) << '\n';
  if (with_excess) {
    const std::vector<Amount> excess = ComputeExcesses(net, values);
    for (VertexId v = 0; v < net.num_vertices(); ++v) {
      if (net.is_internal(v)) out << "x " << v << ' ' << excess[v] << '\n';
    }
  }
  return out.str();
}

std::vector<Amount> ParseFlow(std::string_view text, const Network& net) {
  LineReader in(text);
  const int m = net.num_edges();
  std::vector<Amount> values(m, 0);
  std::vector<char> seen(m, 0);
  while (in.Next()) {
    const std::string_view kind = in.tokens()[0];
    if (kind == "f") {
      in.Arity(3);
      const std::int64_t e = in.Int(1);
      if (e < 0 || e >= m) in.Fail("edge " + std::to_string(e) + " out of range");
      if (seen[e]) in.Fail("edge " + std::to_string(e) + " listed twice");
      seen[e] = 1;
      values[e] = in.Int(2);
    } else if (kind != "value" && kind != "class" && kind != "x") {
      in.Fail("unknown record '" + std::string(kind) + "'");
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kParseError,
                  "flow has no value for edge " + std::to_string(e));
    }
  }
  return values;
}

AllocationInstance ParseAllocation(std::string_view text) {
  LineReader in(text);
  if (!in.Next() || in.tokens().size() != 5 || in.tokens()[0] != "p" ||
      in.tokens()[1] != "allocation") {
    in.Fail("expected 'p allocation <left> <right> <m>'");
  }
  const std::int64_t left = in.Int(2);
  const std::int64_t right = in.Int(3);
  const std::int64_t m = in.Int(4);
  if (left < 0 || right < 0 || m < 0 || left + right > (1 << 24) ||
      m > (1 << 26)) {
    in.Fail("size out of range");
  }
  const std::int64_t n = left + right;
  AllocationInstance inst;
  inst.num_left = static_cast<int>(left);
  inst.num_right = static_cast<int>(right);
  inst.edges.resize(m);
  inst.quota.assign(n, 0);
  inst.preference.assign(n, {});
  std::vector<char> seen(m, 0), pref_seen(n, 0);
  auto vertex = [&](std::size_t i) {
    const std::int64_t v = in.Int(i);
    if (v < 0 || v >= n) in.Fail("vertex " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v);
  };
  while (in.Next()) {
    const std::string_view kind = in.tokens()[0];
    if (kind == "e") {
      in.Arity(5);
      const std::int64_t e = in.Int(1);
      if (e < 0 || e >= m) in.Fail("edge " + std::to_string(e) + " out of range");
      if (seen[e]) in.Fail("edge " + std::to_string(e) + " defined twice");
      seen[e] = 1;
      inst.edges[e] = {vertex(2), vertex(3), in.Int(4)};
    } else if (kind == "q") {
      in.Arity(3);
      inst.quota[vertex(1)] = in.Int(2);
    } else if (kind == "pref") {
      const VertexId v = vertex(1);
      if (pref_seen[v]) in.Fail("second 'pref' line for vertex " + std::to_string(v));
      pref_seen[v] = 1;
      for (std::size_t i = 2; i < in.tokens().size(); ++i) {
        inst.preference[v].push_back(static_cast<EdgeId>(in.Int(i)));
      }
    } else {
      in.Fail("unknown record '" + std::string(kind) + "'");
    }
  }
  for (std::int64_t e = 0; e < m; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kParseError,
                  "edge " + std::to_string(e) + " is never defined");
    }
  }
  return inst;
}

std::string ReadTextFile(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(file),
          std::istreambuf_iterator<char>()};
}

}  // namespace stableflow
