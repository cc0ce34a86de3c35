#pragma once

#include <stdexcept>
#include <string>

namespace pwgs {

enum class ErrorCode {
  // graph construction / validation
  EmptyGraph,
  LoopEdge,
  DuplicateEdge,
  Disconnected,
  DegreeZero,
  VertexOutOfRange,
  InvalidParameter,
  // spectral
  DimensionMismatch,
  SizeLimitExceeded,
  EmptyBand,
  // lambda certification
  EmptySet,
  NoFiniteLambda,
  NotIndependent,
  OverlappingClosures,
  // sampling / frames
  EmptySamplingSet,
  NotASamplingSet,
  SampleIndexMismatch,
  BandTooWide,
  ZeroBandwidth,
  ComplementEmpty,
  // set search
  NoAdmissibleSet,
  InfeasibleTarget,
  // file handling
  FileReadError,
  FileWriteError,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the whole library; the code is what callers
// dispatch on, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pwgs
