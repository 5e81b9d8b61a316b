#pragma once

#include <stdexcept>
#include <string>

namespace asgrs {

/// Caller broke a documented precondition (dimension mismatch, mixed fields, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parameters outside the supported desk-scale range.
class UnsupportedParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All-zero state handed to a register that must produce an m-sequence.
class DegenerateState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator parameters or key failed validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Attack configuration rejected before any work is done.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asgrs
