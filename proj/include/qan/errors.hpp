#pragma once

#include <stdexcept>
#include <string>

namespace qan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverting a series that is identically zero on its window.
struct ZeroSeries : Error {
    ZeroSeries() : Error("zero series has no inverse") {}
    explicit ZeroSeries(const std::string& m) : Error(m) {}
};

// An infinite product with a factor that is exactly zero.
struct SingularFactor : Error {
    explicit SingularFactor(const std::string& m) : Error(m) {}
};

// A binding that hits a pole of one of the denominators.
struct SingularBinding : Error {
    explicit SingularBinding(const std::string& m) : Error(m) {}
};

// Numeric shell summation failed to settle within the shell cap.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& m) : Error(m) {}
};

// The sampler could not produce an admissible binding.
struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& m) : Error(m) {}
};

// Requested evaluation mode is not available for the entry.
struct UnsupportedMode : Error {
    explicit UnsupportedMode(const std::string& m) : Error(m) {}
};

// Malformed configuration, parameter file, or CLI usage.
struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(m) {}
};

} // namespace qan
