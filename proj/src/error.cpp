#include "skeletal/error.hpp"

namespace skel {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonDiscrete: return "NonDiscrete";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotCrystallographic: return "NotCrystallographic";
    case ErrorCode::DisconnectedEdgeGraph: return "DisconnectedEdgeGraph";
    case ErrorCode::DisconnectedVertexFigure: return "DisconnectedVertexFigure";
    case ErrorCode::EdgeFaceDeficit: return "EdgeFaceDeficit";
    case ErrorCode::BoundaryContact: return "BoundaryContact";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotEquivelar: return "NotEquivelar";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::NotAPolyhedron: return "NotAPolyhedron";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::CentersRequired: return "CentersRequired";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotOrientable: return "NotOrientable";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::NoReflectionGenerator: return "NoReflectionGenerator";
    case ErrorCode::NotTwoOrbit: return "NotTwoOrbit";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnsupportedFace: return "UnsupportedFace";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

} // namespace skel
