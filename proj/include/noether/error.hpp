#pragma once

#include <stdexcept>
#include <string>

namespace noether {

// Every failure the toolkit raises derives from Error; the CLI maps each
// subclass onto a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range group/module/sequence specification (exit 2).
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// A mathematically meaningful precondition does not hold (exit 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The base field lacks a required root of unity or divides |G| (exit 1).
class FieldError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured search or enumeration cap would be exceeded (exit 3).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree, or a constructed object fails its
/// own verification (exit 4).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace noether
