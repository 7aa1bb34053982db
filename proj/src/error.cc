#include "stableflow/error.h"

namespace stableflow {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEdgeIntoSource: return "EdgeIntoSource";
    case ErrorCode::kEdgeOutOfSink: return "EdgeOutOfSink";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kCapacityOutOfRange: return "CapacityOutOfRange";
    case ErrorCode::kTerminalOverlap: return "TerminalOverlap";
    case ErrorCode::kBadPreferencePermutation:
      return "BadPreferencePermutation";
    case ErrorCode::kPreferenceListOnTerminal:
      return "PreferenceListOnTerminal";
    case ErrorCode::kInfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kNotAPreflow: return "NotAPreflow";
    case ErrorCode::kNoPositiveInEdge: return "NoPositiveInEdge";
    case ErrorCode::kPartitionViolation: return "PartitionViolation";
    case ErrorCode::kDegenerateCycle: return "DegenerateCycle";
    case ErrorCode::kNotAProperCycle: return "NotAProperCycle";
    case ErrorCode::kIterationGuardExceeded: return "IterationGuardExceeded";
    case ErrorCode::kNotACirculation: return "NotACirculation";
    case ErrorCode::kMixedOrientation: return "MixedOrientation";
    case ErrorCode::kStateReconstructionFailed:
      return "StateReconstructionFailed";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

}  // namespace stableflow
