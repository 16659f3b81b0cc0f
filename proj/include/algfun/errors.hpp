#pragma once

#include <stdexcept>
#include <string>

namespace algfun {

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: spec files, expressions, serialized paths.
struct parse_error : error {
  explicit parse_error(const std::string& msg) : error(msg) {}
};

/// Numerical failure: non-convergence, cluster collisions, tracking aborts.
struct numeric_error : error {
  explicit numeric_error(const std::string& msg) : error(msg) {}
};

/// Group order cap exceeded during closure or subgroup enumeration.
struct cap_error : error {
  explicit cap_error(const std::string& msg) : error(msg) {}
};

}  // namespace algfun
