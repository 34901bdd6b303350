#pragma once

#include <stdexcept>
#include <string>

namespace ordcopies {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A well-formed request that violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The value exists mathematically but does not fit the representation
// (coefficient overflow, term-count or column-count caps).
class RepresentationLimit : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ordcopies
