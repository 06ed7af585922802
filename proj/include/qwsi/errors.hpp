// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qwsi {

/// Failure category. The CLI maps each category onto a process exit code.
enum class ErrorKind {
  invalid_argument,  // malformed input or violated precondition
  invalid_graph,     // disconnected or malformed graph for a distance-based operation
  off_shell,         // momentum not on the requested mass shell
  tolerance,         // a numerical check exceeded its tolerance
  search_limit,      // exhaustive search refused (input too large)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_argument(const std::string& what) {
  return Error(ErrorKind::invalid_argument, what);
}

inline Error invalid_graph(const std::string& what) {
  return Error(ErrorKind::invalid_graph, what);
}

}  // namespace qwsi
