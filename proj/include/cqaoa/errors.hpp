#pragma once

#include <stdexcept>
#include <string>

namespace cqaoa {

// Requested problem size exceeds the configured simulator cap.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to reach its tolerance.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Malformed input text; `line()` is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cqaoa
