#include "dicycle/error.hpp"

namespace dicycle {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid argument";
    case errc::empty_graph: return "empty graph";
    case errc::loop_arc: return "loop arc";
    case errc::duplicate_arc: return "duplicate arc";
    case errc::vertex_out_of_range: return "vertex out of range";
    case errc::not_eulerian: return "not Eulerian";
    case errc::unreachable: return "unreachable vertex";
    case errc::arc_not_in_graph: return "arc not in graph";
    case errc::not_violating: return "arc not violating";
    case errc::not_ancestor: return "not an ancestor";
    case errc::not_back_arc: return "not a back arc";
    case errc::not_final: return "branching not final";
    case errc::not_strongly_connected: return "not strongly connected";
    case errc::retry_budget_exceeded: return "retry budget exceeded";
    case errc::budget_exceeded: return "budget exceeded";
    case errc::parse_error: return "parse error";
    case errc::no_back_arc: return "no back arc";
    case errc::termination_budget_exceeded: return "termination budget exceeded";
    case errc::internal_invariant_violation: return "internal invariant violation";
  }
  return "unknown error";
}

bool is_bug(errc code) {
  switch (code) {
    case errc::no_back_arc:
    case errc::termination_budget_exceeded:
    case errc::internal_invariant_violation:
      return true;
    default:
      return false;
  }
}

}  // namespace dicycle
