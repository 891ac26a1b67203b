#include "stellar/error.hpp"

namespace stellar {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateVertexInGenerator: return "DuplicateVertexInGenerator";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::SharedVertex: return "SharedVertex";
    case ErrorKind::FaceAbsent: return "FaceAbsent";
    case ErrorKind::VertexInUse: return "VertexInUse";
    case ErrorKind::NotWeldable: return "NotWeldable";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::MoveFailed: return "MoveFailed";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotManifold: return "NotManifold";
    case ErrorKind::InteriorFaceDegree: return "InteriorFaceDegree";
    case ErrorKind::NoAdjacentGenerator: return "NoAdjacentGenerator";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::InternalIdentity: return "InternalIdentity";
    case ErrorKind::OpenSurface: return "OpenSurface";
    case ErrorKind::BadNormalForm: return "BadNormalForm";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Malformed:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DuplicateVertexInGenerator:
    case ErrorKind::UnknownVertex:
        return true;
    default:
        return false;
    }
}

} // namespace stellar
