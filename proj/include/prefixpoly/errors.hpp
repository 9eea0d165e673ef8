#pragma once

#include <stdexcept>
#include <string>

namespace prefixpoly {

/// Shapes of operands do not match (non-square matrix, wrong point length).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An enumeration or scan would exceed its configured work guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace prefixpoly
