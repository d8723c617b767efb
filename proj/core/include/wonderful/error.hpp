#ifndef WONDERFUL_ERROR_HPP
#define WONDERFUL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wonderful {

// Every domain failure carries one of these codes; error_name() gives the
// stable identifier that the CLI prints and tests match against.
enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  UnknownVertex,
  SizeCap,
  NoEdges,
  DisconnectedPart,
  OverlappingParts,
  LoopCreated,
  ForeignElement,
  ExplosionGuard,
  InconsistentR,
  DivisionFailure,
  DimensionMismatch,
  DisconnectedGraph,
  InvalidArgument,
  UnknownFamily,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace wonderful

#endif  // WONDERFUL_ERROR_HPP
