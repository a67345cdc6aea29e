#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mink {

// Base class for all library errors. Callers that do not care about the
// precise failure mode can catch this one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression / curve-file parsing. Carries the byte offset of the offending
// token so tools can point at the exact spot.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " at offset " + std::to_string(byte_offset)),
          offset(byte_offset) {}
    std::size_t offset;
};

struct DomainError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

struct UnknownPreset : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct DegenerateSpeed : Error { using Error::Error; };

struct WrongCausalType : Error { using Error::Error; };
struct DegenerateCurvature : Error { using Error::Error; };
struct UnsupportedNormal : Error { using Error::Error; };
struct LightLikeDarboux : Error { using Error::Error; };

struct NotOnSphere : Error { using Error::Error; };
struct NotUnitSpeed : Error { using Error::Error; };
struct EvoluteUndefined : Error { using Error::Error; };

struct QuadratureFailure : Error { using Error::Error; };
struct DegenerateBertrandPoint : Error { using Error::Error; };

struct ThetaZero : Error { using Error::Error; };
struct BadCone : Error { using Error::Error; };
struct DegenerateNormal : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

} // namespace mink
