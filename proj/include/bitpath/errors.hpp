#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitpath {

// Binary law applied to vertex sets of different lengths.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vertex id outside [0, order).
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Malformed input document. `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}

    std::size_t line;
};

}  // namespace bitpath
