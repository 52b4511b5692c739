#pragma once

#include <stdexcept>
#include <string>

namespace eqspec {

// Numerical failure (non-convergence, residual rejection, singular step).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg, long index = -1)
        : std::runtime_error(msg), index_(index) {}

    // Failing node/eigenpair index when known, -1 otherwise.
    long index() const noexcept { return index_; }

private:
    long index_;
};

// File and parsing failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg, long line = -1)
        : std::runtime_error(msg), line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

}  // namespace eqspec
