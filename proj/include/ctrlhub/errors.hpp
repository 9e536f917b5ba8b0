#pragma once

#include <stdexcept>
#include <string>

namespace ctrlhub {

// Malformed edge-list input. Carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Out-of-range or inconsistent user-supplied parameters (generator sizes, ladders, limits).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input describes a graph with no nodes.
class empty_graph_error : public std::runtime_error {
 public:
  explicit empty_graph_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an API precondition (invalid matching, mismatched universes, ...).
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// File could not be opened or read.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Process exit codes used by the command-line tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse = 2;
inline constexpr int parameter = 3;
inline constexpr int truncated = 4;
inline constexpr int empty_graph = 5;
inline constexpr int io = 6;
}  // namespace exit_code

}  // namespace ctrlhub
