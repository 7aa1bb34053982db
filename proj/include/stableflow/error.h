#ifndef STABLEFLOW_ERROR_H_
#define STABLEFLOW_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stableflow {

enum class ErrorCode {
  kInvalidArgument,
  kEdgeIntoSource,
  kEdgeOutOfSink,
  kSelfLoop,
  kDuplicateEdge,
  kCapacityOutOfRange,
  kTerminalOverlap,
  kBadPreferencePermutation,
  kPreferenceListOnTerminal,
  kInfeasibleParameters,
  kParseError,
  kModeMismatch,
  kNotAPreflow,
  kNoPositiveInEdge,
  kPartitionViolation,
  kDegenerateCycle,
  kNotAProperCycle,
  kIterationGuardExceeded,
  kNotACirculation,
  kMixedOrientation,
  kStateReconstructionFailed,
  kInstanceTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stableflow

#endif  // STABLEFLOW_ERROR_H_
