#pragma once

#include <stdexcept>
#include <string>

namespace fondltl {

/// Base class for every diagnostic raised by the toolchain.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when unknown.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Input parses but violates a well-formedness rule (undeclared predicate,
/// free variable, non-ground init atom, name clash, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// Formula is outside the fragment an operation accepts (e.g. a past
/// formula handed to the LTLf construction, or a mixed formula).
class FragmentError : public Error {
public:
    using Error::Error;
};

/// Construct the pipeline does not support (nested conditional effects,
/// residual `when` at grounding time, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A policy does not fit the task it is replayed against.
class PolicyError : public Error {
public:
    using Error::Error;
};

}  // namespace fondltl
