#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmpfp {

/// Base class for recoverable failures raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: empty data, negative weights, inconsistent parameters.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A malformed record in an input file. Carries the 1-based physical line.
class IngestionError : public ValidationError {
public:
    IngestionError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Internal inconsistency or a failure of a numerical stage.
class ComputationError : public Error {
public:
    using Error::Error;
};

/// A precondition of a library call was not met by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tmpfp
