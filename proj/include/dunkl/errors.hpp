#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Special functions
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};
struct UnsupportedOrderError : Error {
    explicit UnsupportedOrderError(const std::string& msg) : Error(msg) {}
};

// Quadrature
struct QuadratureResult;
struct EnvelopeViolationError : Error {
    explicit EnvelopeViolationError(const std::string& msg) : Error(msg) {}
};

// Profiles and transforms
struct NonFiniteSampleError : Error {
    NonFiniteSampleError(const std::string& msg, double radius_)
        : Error(msg), radius(radius_) {}
    double radius;
};
struct NonIntegrableProfileError : Error {
    explicit NonIntegrableProfileError(const std::string& msg) : Error(msg) {}
};
struct DivergentNormError : Error {
    explicit DivergentNormError(const std::string& msg) : Error(msg) {}
};

// Semigroup / potentials
struct UnsupportedBetaError : Error {
    explicit UnsupportedBetaError(const std::string& msg) : Error(msg) {}
};
struct AlphaOutOfRangeError : Error {
    explicit AlphaOutOfRangeError(const std::string& msg) : Error(msg) {}
};
struct SignChangeInWindowError : Error {
    explicit SignChangeInWindowError(const std::string& msg) : Error(msg) {}
};

// Wavelet measures
struct SingularSystemError : Error {
    explicit SingularSystemError(const std::string& msg) : Error(msg) {}
};
struct InsufficientPointsError : Error {
    explicit InsufficientPointsError(const std::string& msg) : Error(msg) {}
};
struct InsufficientVanishingMomentsError : Error {
    explicit InsufficientVanishingMomentsError(const std::string& msg) : Error(msg) {}
};
struct ZeroKappaError : Error {
    explicit ZeroKappaError(const std::string& msg) : Error(msg) {}
};

// Rates
struct InsufficientDecayError : Error {
    explicit InsufficientDecayError(const std::string& msg) : Error(msg) {}
};
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

// CLI
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace dunkl
