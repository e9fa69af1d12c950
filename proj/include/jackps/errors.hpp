#ifndef JACKPS_ERRORS_HPP
#define JACKPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jackps {

/// Base class of every mathematically meaningful failure.  The CLI maps
/// these to exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violation: malformed composition, invalid (I,J) pair,
/// repeated part in an antisymmetric block, variable-count mismatch, ...
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// A parameter value at which a construction degenerates: spectral-vector
/// collision in a cone, vanishing spectral gap, Pochhammer pole.
class DegenerateParameterError : public Error {
public:
    explicit DegenerateParameterError(const std::string& msg)
        : Error("degenerate parameter: " + msg) {}
};

/// Exact division requested for a non-divisible pair.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& msg) : Error(msg) {}
};

/// Two independent computation routes disagreed, or a structural
/// divisibility failed.  Never expected to fire; indicates a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace jackps

#endif
