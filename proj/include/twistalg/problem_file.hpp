#pragma once

#include <string>

#include "twistalg/error.hpp"
#include "twistalg/instance.hpp"

namespace twistalg {

/// ParseError carrying the 1-based line it refers to.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the sectioned key/value problem format:
///
///   name = "quantum_plane"
///   p = 5
///   seed = 0                      # optional
///   l_orders = [4, 4]
///   [[component]]                 # repeated, non-increasing n
///   n = 1
///   r = 2
///   [action]                      # one key per L-generator, one matrix per component
///   g1 = [[[2, 0], [0, 1]]]
///   g2 = [[[1, 0], [0, 2]]]
///   [[form]]                      # 1-based generator pair, value zeta_order^exponent
///   i = 1
///   j = 2
///   order = 4
///   exponent = 1
///
/// Only syntax is checked here.
ProblemSpec parse_problem_text(const std::string& text);

/// Syntax plus validation (make_instance); semantic failures are rethrown as
/// ValidationError naming the original check.
ProblemSpec load_problem(const std::string& path);
ProblemSpec validate_problem(ProblemSpec spec);

/// Inverse of parse_problem_text.
std::string write_problem_text(const ProblemSpec& spec);

}  // namespace twistalg
