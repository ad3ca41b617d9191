#pragma once

#include <stdexcept>
#include <string>

namespace widthfill {

/// Malformed input: bad graph/representation/strategy files, out-of-range
/// vertices, violated construction constraints.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based source line, or 0 when the error is not tied to a line.
  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A solver was asked to handle more vertices than its configured limit.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(const std::string& solver, int n, int limit)
      : std::runtime_error(solver + ": graph has " + std::to_string(n) + " vertices, limit is " +
                           std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  [[nodiscard]] int vertices() const noexcept { return n_; }
  [[nodiscard]] int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

/// A parameter is outside the range an operation accepts.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace widthfill
