#ifndef STABLEFLOW_INSTANCE_IO_H_
#define STABLEFLOW_INSTANCE_IO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"

namespace stableflow {

// Instance text format, one record per line, '#' starts a comment:
//
//   p stableflow <n> <m>
//   s <vertex> ...             sources
//   t <vertex> ...             sinks
//   e <edge-id> <tail> <head> <capacity>
//   in  <vertex> <edge-id> ... most preferred first
//   out <vertex> <edge-id> ...
//   g <vertex> <gamma>         optional
//   b <vertex> <beta>          optional
struct ParsedInstance {
  Network network;
  // Zero where no g / b record was given.
  ExcessBounds bounds;
  bool has_gamma = false;
  bool has_beta = false;
};

// Throws ParseError ("line N: ...") on malformed text and forwards the
// validation errors of Network::Build.
ParsedInstance ParseInstance(std::string_view text);

// Writes `net` (and the nonzero entries of `bounds`, if given) so that
// ParseInstance reproduces it.
std::string SerializeInstance(const Network& net,
                              const ExcessBounds* bounds = nullptr);

// Flow text format: "f <edge-id> <value>" per edge, then "value <v>" and
// "class <name>"; with `with_excess`, "x <vertex> <excess>" per internal
// vertex.
std::string SerializeFlow(const Network& net, std::span<const Amount> values,
                          bool with_excess = false);

// Reads the f records (value, class and x lines are accepted and ignored).
// Every edge must appear exactly once.
std::vector<Amount> ParseFlow(std::string_view text, const Network& net);

// Allocation text format:
//
//   p allocation <left> <right> <m>
//   e <edge-id> <left-vertex> <right-vertex> <capacity>
//   q <vertex> <quota>
//   pref <vertex> <edge-id> ...   most preferred first
//
// Left vertices are 0..left-1, right vertices left..left+right-1. Vertices
// without q records have quota 0.
AllocationInstance ParseAllocation(std::string_view text);

// Reads a whole file, or stdin for "-". Throws InvalidArgument when the
// file cannot be opened.
std::string ReadTextFile(const std::string& path);

}  // namespace stableflow

#endif  // STABLEFLOW_INSTANCE_IO_H_
