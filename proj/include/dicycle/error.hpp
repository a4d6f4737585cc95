#pragma once

#include <stdexcept>
#include <string>

namespace dicycle {

// Error codes for everything the library can reject or detect.
// The last three codes signal a broken internal guarantee (a bug in this
// library or a falsified lemma), not bad input; the CLI maps them to a
// separate exit code.
enum class errc {
  invalid_argument,
  empty_graph,
  loop_arc,
  duplicate_arc,
  vertex_out_of_range,
  not_eulerian,
  unreachable,
  arc_not_in_graph,
  not_violating,
  not_ancestor,
  not_back_arc,
  not_final,
  not_strongly_connected,
  retry_budget_exceeded,
  budget_exceeded,
  parse_error,
  no_back_arc,
  termination_budget_exceeded,
  internal_invariant_violation,
};

const char* errc_name(errc code);

// True for codes that mean "the implementation or a proved guarantee is
// broken" as opposed to "the input was bad".
bool is_bug(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what)
      : Error(errc::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dicycle
