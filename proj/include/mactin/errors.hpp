#pragma once

#include <stdexcept>

namespace mactin {

/// Numerical-domain or rate-region violations. The CLI maps these to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested modulation order cannot be realised as a square QAM.
class UnsupportedOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed configuration or inconsistent user input. Exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mactin
