#pragma once

#include <stdexcept>
#include <string>

namespace spinesynth {

// Error hierarchy. Every failure mode named in a module contract maps to one
// of these; nothing is reported through return codes or silent NaNs.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates an operation precondition or type invariant.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Malformed or unsupported file content.
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Filesystem-level failure (missing file, unwritable path).
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Structurally valid input that cannot be processed (constant volume,
// empty cohort, bad config value).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Training produced non-finite losses repeatedly.
struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

}  // namespace spinesynth
