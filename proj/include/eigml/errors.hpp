#pragma once

#include <stdexcept>
#include <string>

namespace eigml {

// Error classes map 1:1 onto CLI exit codes (see tools/eigml_main.cpp).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatches; message names both shapes.
struct DimensionError : ValidationError {
  explicit DimensionError(const std::string& msg) : ValidationError(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset line-schema violations; message carries file:line.
struct ParseError : IoError {
  explicit ParseError(const std::string& msg) : IoError(msg) {}
};

// Numeric/check failures: NaN losses, failed gradient checks.
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eigml
