#include "wonderful/error.hpp"

namespace wonderful {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::DisconnectedPart: return "DisconnectedPart";
    case ErrorCode::OverlappingParts: return "OverlappingParts";
    case ErrorCode::LoopCreated: return "LoopCreated";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::InconsistentR: return "InconsistentR";
    case ErrorCode::DivisionFailure: return "DivisionFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace wonderful
