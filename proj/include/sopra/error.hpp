#pragma once

#include <stdexcept>
#include <string>

namespace sopra {

/// Process exit codes shared by every command-line entry point.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParse = 2;
inline constexpr int kConstraint = 3;
inline constexpr int kUnknownKey = 4;
inline constexpr int kIo = 5;
inline constexpr int kUsage = 64;
}  // namespace exit_code

/// Base for every recoverable error raised while loading, validating or
/// writing simulation inputs and outputs. Carries the exit code the CLI
/// reports for it.
class Error : public std::runtime_error {
 public:
  Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int exit_code() const noexcept { return code_; }

 private:
  int code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(exit_code::kParse, what) {}
};

/// A value is well-formed but violates a model constraint (range, shape,
/// referential integrity). Any "configuration error" in the model lands here.
class ConstraintError : public Error {
 public:
  explicit ConstraintError(const std::string& what) : Error(exit_code::kConstraint, what) {}
};

class UnknownKeyError : public Error {
 public:
  explicit UnknownKeyError(const std::string& what) : Error(exit_code::kUnknownKey, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(exit_code::kIo, what) {}
};

}  // namespace sopra
