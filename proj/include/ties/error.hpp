#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ties {

// Exit codes used by the CLI. Library code throws the matching exception.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitNumeric = 3,
};

// Bad flags, missing arguments.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (files, unknown ids, bad labels).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input with file/line context.
struct FormatError : InputError {
  FormatError(const std::string& path, std::uint64_t line, const std::string& msg)
      : InputError(path + ":" + std::to_string(line) + ": " + msg),
        path(path),
        line(line) {}
  std::string path;
  std::uint64_t line;
};

// Numeric failure: non-convergence, overflow, internal consistency checks.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ties
