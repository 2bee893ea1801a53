#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fsimple {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad index, boundary point passed as
// an interior point, non-hyperbolic element where one is required, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A geometric predicate landed inside the tolerance band and refuses to guess.
class Uncertain : public Error {
 public:
  using Error::Error;
};

// A computation finished but its result is not trustworthy: incomplete
// crossing search, truncated growth table, uncertified input to a filter.
class ComputationError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or command line.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace fsimple
