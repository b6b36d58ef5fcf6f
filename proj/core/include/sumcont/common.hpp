#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sumcont {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A required input condition does not hold. CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// Requested work exceeds a configured cost or memory cap. Exit code 3.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A numerically checked inequality that must always hold was violated.
/// This is a build-stopping event. Exit code 4.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace sumcont
