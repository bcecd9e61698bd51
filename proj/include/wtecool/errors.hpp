#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wtecool {

/// A value violates the invariants of the type it was passed to.
/// `field()` names the offending parameter (e.g. "corridor.beta").
class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A well-formed configuration for which the requested quantity does not exist
/// (e.g. negative net avoided electricity before any transport).
class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lookup of a scenario, key or enumerator that is not known.
class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed configuration text: bad key, unparsable value, bad file row.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wtecool
