// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace gainomech {

// Base for all library errors; `variant()` returns the stable error name
// used by the CLI diagnostics and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string variant, const std::string& what)
        : std::runtime_error(variant + ": " + what), variant_(std::move(variant)) {}
    const std::string& variant() const noexcept { return variant_; }

private:
    std::string variant_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

struct BelowThreshold : Error {
    explicit BelowThreshold(const std::string& what) : Error("BelowThreshold", what) {}
};

struct ZeroGain : Error {
    explicit ZeroGain(const std::string& what) : Error("ZeroGain", what) {}
};

struct AmbiguousSteadyState : Error {
    explicit AmbiguousSteadyState(const std::string& what) : Error("AmbiguousSteadyState", what) {}
};

struct SingularResponse : Error {
    explicit SingularResponse(const std::string& what) : Error("SingularResponse", what) {}
};

struct UnstableSystem : Error {
    explicit UnstableSystem(const std::string& what) : Error("UnstableSystem", what) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& what) : Error("ModelMismatch", what) {}
};

struct HeatingConfiguration : Error {
    explicit HeatingConfiguration(const std::string& what) : Error("HeatingConfiguration", what) {}
};

struct NearSingularKappa : Error {
    explicit NearSingularKappa(const std::string& what) : Error("NearSingularKappa", what) {}
};

struct NoMinimumInBounds : Error {
    explicit NoMinimumInBounds(const std::string& what) : Error("NoMinimumInBounds", what) {}
};

struct NonConvergedQuadrature : Error {
    explicit NonConvergedQuadrature(const std::string& what) : Error("NonConvergedQuadrature", what) {}
};

} // namespace gainomech
