#include "circlesep/error.hpp"

namespace circlesep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleProjection: return "PoleProjection";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::IdenticallyDegeneratePath: return "IdenticallyDegeneratePath";
    case ErrorCode::NotSemigeneral: return "NotSemigeneral";
    case ErrorCode::TangentialTouch: return "TangentialTouch";
    case ErrorCode::NonLocalChange: return "NonLocalChange";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace circlesep
