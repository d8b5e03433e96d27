#pragma once

#include <stdexcept>
#include <string>

namespace toricirc {

// Malformed input text (matrix / graph files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented operation precondition was violated by the caller.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal invariant failed; indicates a bug in the engine, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace toricirc
