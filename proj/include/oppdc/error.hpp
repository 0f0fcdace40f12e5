#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oppdc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a byte offset (graph6) or a 1-based
/// line number (edge lists, cover files), depending on the format.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Arguments that do not belong to the graph they are used with
/// (foreign vertex ids, edges that are not edges, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Preconditions of a construction or structural query are not met.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested graph is one of the known graphs without a cover (K3, K5).
class NonExistenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A surgery produced something the verifier rejects, or a completion
/// search gave up. Never accompanied by a partial result.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// The cycle attachment met an intersection pattern none of its cases handle.
class CaseNotCovered : public ConstructionError {
public:
    using ConstructionError::ConstructionError;
};

}  // namespace oppdc
