#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxlin {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Assignment length does not match the system it is evaluated against.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A documented precondition was violated by the caller.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Weight arithmetic would exceed the supported range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Exhaustive search was requested on more variables than the budget allows.
struct BudgetExceededError : Error {
    BudgetExceededError(std::size_t n_vars, std::size_t budget)
        : Error("exhaustive search over " + std::to_string(n_vars) +
                " variables exceeds budget of " + std::to_string(budget)),
          n_vars(n_vars),
          budget(budget) {}
    std::size_t n_vars;
    std::size_t budget;
};

// A result failed its own re-verification. Indicates a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. `line` is 1-based.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line), detail(msg) {}
    std::size_t line;
    std::string detail;
};

}  // namespace maxlin
