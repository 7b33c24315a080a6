#pragma once
#include <stdexcept>
#include <string>

namespace orbicheck {

// All library failures surface as typed exceptions rooted here, so callers
// (CLI, tests) can distinguish "input is bad" from "computation gave up".
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : Error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

struct UnknownVariableError : ParseError {
    UnknownVariableError(const std::string& name, size_t at)
        : ParseError("unknown variable '" + name + "'", at) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// weight inference
struct UnderdeterminedError : Error {
    explicit UnderdeterminedError(const std::string& msg) : Error(msg) {}
};
struct InconsistentError : Error {
    explicit InconsistentError(const std::string& msg) : Error(msg) {}
};

// ideal-theoretic failures
struct NotZeroDimensionalError : Error {
    explicit NotZeroDimensionalError(const std::string& msg) : Error(msg) {}
};
struct UnitIdealError : Error {
    explicit UnitIdealError(const std::string& msg) : Error(msg) {}
};
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// shape classification
struct NotSquareError : Error {
    explicit NotSquareError(const std::string& msg) : Error(msg) {}
};
struct NotRepresentableError : Error {
    explicit NotRepresentableError(const std::string& msg) : Error(msg) {}
};

// matrix factorization construction
struct NonPolynomialCompletionError : Error {
    explicit NonPolynomialCompletionError(const std::string& msg) : Error(msg) {}
};
struct DetMismatchError : Error {
    explicit DetMismatchError(const std::string& msg) : Error(msg) {}
};

// numerics
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};
struct AmbiguousMatchError : Error {
    explicit AmbiguousMatchError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};
struct UnsupportedArityError : UnsupportedError {
    explicit UnsupportedArityError(const std::string& msg) : UnsupportedError(msg) {}
};

} // namespace orbicheck
