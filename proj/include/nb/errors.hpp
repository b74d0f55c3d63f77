#pragma once

#include <stdexcept>
#include <string>

namespace nb {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdenticalLines : Error { using Error::Error; };
struct DegenerateTransform : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct GenerationFailed : Error { using Error::Error; };
struct MalformedComplex : Error { using Error::Error; };
struct CapTooLow : Error { using Error::Error; };
struct ParameterRange : Error { using Error::Error; };
struct TooManyComponents : Error { using Error::Error; };
struct SearchSpaceExceeded : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct NonPlanarRotation : Error { using Error::Error; };

} // namespace nb
