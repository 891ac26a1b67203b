#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stellar {

enum class ErrorKind {
    // input / document errors
    Malformed,
    DimensionMismatch,
    DuplicateVertexInGenerator,
    UnknownVertex,
    // complex-core
    SharedVertex,
    // moves
    FaceAbsent,
    VertexInUse,
    NotWeldable,
    NotInjective,
    NotInvertible,
    MoveFailed,
    // recognition
    NotUniform,
    EmptyComplex,
    // quotient
    NotRegular,
    // normalize
    NotConnected,
    NotManifold,
    InteriorFaceDegree,
    NoAdjacentGenerator,
    UnsupportedDimension,
    InternalIdentity,
    // pi1
    OpenSurface,
    BadNormalForm,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by unreadable or schema-violating input.
bool is_input_error(ErrorKind kind);

class StellarError : public std::runtime_error {
public:
    StellarError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace stellar
