#pragma once

#include <stdexcept>
#include <string>

namespace spla {

/// Invalid user input: malformed expression, violated hypothesis
/// ("common component", "not reduced", ...). Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal invariant broke: criteria that provably agree diverged, a
/// containment guaranteed by theory failed, generic-position retries
/// disagreed. Maps to CLI exit code 3.
struct EngineError : std::runtime_error {
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spla
