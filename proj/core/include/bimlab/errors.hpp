#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word or token outside the expected alphabet.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called on a machine that does not satisfy its precondition
/// (for example epsilon-input arcs where only letter arcs are allowed).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An epsilon-input cycle carries a nonempty output, so the relation is infinite.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration or state cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A self-check inside the library failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed machine text.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace bimlab
