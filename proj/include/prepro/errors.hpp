#pragma once

#include <stdexcept>
#include <string>

namespace prepro {

/// Malformed textual input (group specs, JSON documents, rationals).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally invalid argument (non-composable paths where required,
/// inhomogeneous vectors, mismatched ambient dimensions, ...).
struct InvalidArgument : std::runtime_error {
    explicit InvalidArgument(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation's mathematical precondition failed; the message carries the
/// offending data (e.g. a dimension table).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource limit (search-space size, ...) was exceeded.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace prepro
