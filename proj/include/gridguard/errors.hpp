#pragma once

#include <stdexcept>
#include <string>

namespace gridguard {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file (bad JSON shape, bad CSV row, unparsable number).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that disagrees with the grid it is paired with.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A component cut off from the slack bus still carries injections.
class IslandedLoad : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class InfeasibleProfile : public Error {
 public:
  using Error::Error;
};

class InfeasibleCalibration : public Error {
 public:
  using Error::Error;
};

class StepAfterDone : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (CLI arguments or config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace gridguard
