#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netchor {

/// Broad failure classes. The numeric values double as CLI exit codes and
/// C API status codes.
enum class ErrorKind : int {
  kValidation = 1,
  kInput = 2,
  kNumerical = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Bad arguments, out-of-range ids, malformed files.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::kInput, what) {}
};

/// Input is well-formed but the requested quantity is undefined on it
/// (no edges, all nodes isolated, ...).
class DegenerateInputError : public InputError {
 public:
  explicit DegenerateInputError(const std::string& what)
      : InputError("degenerate input: " + what) {}
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a modelling rule, e.g. a self-loop in an
/// edge list.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t line, const std::string& what)
      : Error(ErrorKind::kValidation, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public InputError {
 public:
  explicit IoError(const std::string& what) : InputError("i/o error: " + what) {}
};

/// Invalid pipeline configuration; `field` is a dotted path such as
/// `input.generate.n`.
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : InputError("config error at '" + field + "': " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::kNumerical, what) {}
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : NumericalError(what + " (no convergence after " + std::to_string(iterations) +
                       " iterations)"),
        iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

class FitError : public NumericalError {
 public:
  explicit FitError(const std::string& what) : NumericalError("power-law fit failed: " + what) {}
};

class DivergenceError : public NumericalError {
 public:
  explicit DivergenceError(double time)
      : NumericalError("state diverged (non-finite value) at t = " + std::to_string(time)),
        time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace netchor
