#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparselp {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes: parse errors 2, semantic/encoding errors 3, resource caps 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Unreadable input file; reported like a parse error.
class IoError : public Error {
public:
    using Error::Error;
};

// A program, matrix or argument violates a structural invariant.
class SemanticError : public Error {
public:
    using Error::Error;
};

class ProgramError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class EncodingError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class ValidationError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class DimensionError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class ParameterError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class ConvergenceError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

// An explicit size cap was hit (brute-force atom cap, guess columns, dense memory).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class GuessExplosionError : public ResourceLimitError {
public:
    GuessExplosionError(std::size_t free_negations, std::size_t cap);

    std::size_t free_negations() const noexcept { return free_negations_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t free_negations_;
    std::size_t cap_;
};

} // namespace sparselp
