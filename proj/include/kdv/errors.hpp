#pragma once

#include <stdexcept>
#include <string>

namespace kdv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function, or evaluation at a singularity.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double location)
      : Error(what), location_(location) {}
  explicit DomainError(const std::string& what) : Error(what) {}
  double location() const { return location_; }

 private:
  double location_ = 0.0;
};

/// Mesh lost its ordering: spacing at `index` is (numerically) non-positive.
class TanglingError : public Error {
 public:
  TanglingError(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// A step produced a non-finite value.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Linear solve failed (singular to tolerance).
class SolverError : public Error {
 public:
  SolverError(const std::string& what, int row) : Error(what), row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

/// Interpolation target outside the stencil hull.
class ExtrapolationError : public Error {
 public:
  ExtrapolationError(const std::string& what, double target)
      : Error(what), target_(target) {}
  double target() const { return target_; }

 private:
  double target_;
};

/// Invalid configuration (file, preset or programmatic).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace kdv
