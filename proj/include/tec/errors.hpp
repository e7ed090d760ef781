#pragma once

#include <stdexcept>
#include <string>

namespace tec {

// Error taxonomy mirrors the CLI exit codes: 2 usage, 3 data, 4 numeric.

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tec
