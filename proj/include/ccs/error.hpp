#pragma once

#include <stdexcept>
#include <string>

namespace ccs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a type invariant (non-projection, non-state, bad partition, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MissingParameter : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NormalizationViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Mathematically well-formed input outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityCondition : public DomainError {
 public:
  using DomainError::DomainError;
};

class ProbabilityOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotACCS : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoAssociatedState : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateTheta : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ccs
