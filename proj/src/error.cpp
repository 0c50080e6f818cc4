#include "cwsphere/error.hpp"

namespace cwsphere {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidGeometry: return "InvalidGeometry";
    case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::No0Hat: return "No0Hat";
    case ErrorKind::No1Hat: return "No1Hat";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::VertexCollision: return "VertexCollision";
    case ErrorKind::ChainNotInL: return "ChainNotInL";
    case ErrorKind::ChainMustEndAtTop: return "ChainMustEndAtTop";
    case ErrorKind::NotProperElement: return "NotProperElement";
    case ErrorKind::NotAMultichain: return "NotAMultichain";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cwsphere
