#pragma once

#include <stdexcept>
#include <string>

namespace acm {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (CLI exit code 2).
struct parse_error : error {
    explicit parse_error(const std::string& msg, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_no(line) {}
    int line_no;
};

// Structurally valid input violating a domain invariant (CLI exit code 3).
struct invariant_error : error {
    explicit invariant_error(const std::string& msg, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_no(line) {}
    int line_no;
};

// staircase() called on a configuration without the (*)-property.
struct not_star_error : error {
    not_star_error() : error("configuration does not have the (*)-property") {}
};

// Random generation failed certification too many times.
struct retry_exhausted_error : error {
    explicit retry_exhausted_error(const std::string& msg) : error(msg) {}
};

}  // namespace acm
