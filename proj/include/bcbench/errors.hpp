#pragma once

#include <stdexcept>
#include <string>

namespace bcbench {

// I/O failures: unreadable or unwritable files.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally malformed input (wrong field count etc.); carries context
// such as the offending line number in the message.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input with invalid content (bad class code, value out of
// range, empty class, single-class balance request).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration: unsupported solver/penalty combination, bad
// hyperparameter value, unknown format name, empty grid.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension mismatch between a model and an input vector.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace bcbench
