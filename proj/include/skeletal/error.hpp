#pragma once

#include <stdexcept>
#include <string>

namespace skel {

enum class ErrorCode {
  InvalidArgument,
  FieldMismatch,
  DivisionByZero,
  NonDiscrete,
  RankDeficient,
  NotCrystallographic,
  DisconnectedEdgeGraph,
  DisconnectedVertexFigure,
  EdgeFaceDeficit,
  BoundaryContact,
  NotRegular,
  NotEquivelar,
  SizeLimit,
  DegenerateFace,
  InvariantViolation,
  RelationViolation,
  NotAPolyhedron,
  WindowTooSmall,
  CentersRequired,
  ZeroScale,
  NotBipartite,
  NotOrientable,
  NoSolution,
  UnknownFamily,
  NoReflectionGenerator,
  NotTwoOrbit,
  Unstable,
  UnknownEntry,
  UnsupportedFace,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace skel
