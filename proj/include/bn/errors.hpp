#pragma once

#include <stdexcept>
#include <string>

namespace bn {

// Malformed input text (edge lists, graph6, broadcast records).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input that an operation refuses (disconnected graph,
// strength above eccentricity, oracle called beyond its size cap, ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A postcondition or cross-check failed at runtime. Carries enough context
// to reproduce the offending instance.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bn
