#include "pwgs/errors.hpp"

namespace pwgs {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::EmptyBand: return "EmptyBand";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NoFiniteLambda: return "NoFiniteLambda";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::OverlappingClosures: return "OverlappingClosures";
    case ErrorCode::EmptySamplingSet: return "EmptySamplingSet";
    case ErrorCode::NotASamplingSet: return "NotASamplingSet";
    case ErrorCode::SampleIndexMismatch: return "SampleIndexMismatch";
    case ErrorCode::BandTooWide: return "BandTooWide";
    case ErrorCode::ZeroBandwidth: return "ZeroBandwidth";
    case ErrorCode::ComplementEmpty: return "ComplementEmpty";
    case ErrorCode::NoAdmissibleSet: return "NoAdmissibleSet";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::FileReadError: return "FileReadError";
    case ErrorCode::FileWriteError: return "FileWriteError";
  }
  return "Unknown";
}

}  // namespace pwgs
