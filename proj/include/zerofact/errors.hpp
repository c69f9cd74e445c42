#pragma once

#include <stdexcept>
#include <string>

namespace zerofact {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact integer result does not fit a 64-bit word.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Adaptive refinement ran out of budget before meeting its tolerance.
/// Carries the best value found and the error estimate actually achieved.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_value, double achieved_error)
        : std::runtime_error(what), best_value_(best_value), achieved_error_(achieved_error) {}

    double best_value() const noexcept { return best_value_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double best_value_;
    double achieved_error_;
};

class InsufficientDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateVarianceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two quantities that must agree by construction did not.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A sampled function threw while a limit sequence was being evaluated.
class SampleEvaluationError : public std::runtime_error {
public:
    SampleEvaluationError(const std::string& what, int k) : std::runtime_error(what), k_(k) {}

    /// Exponent of the offending sample point t = 2^-k.
    int k() const noexcept { return k_; }

private:
    int k_;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Output could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; line() is 1-based, 0 when the file could not be read at all.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace zerofact
