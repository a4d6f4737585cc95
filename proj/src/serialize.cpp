#include "dicycle/serialize.hpp"

namespace dicycle {

std::string format_double(double x) { return nlohmann::json(x).dump(); }

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{
      {"n", r.n},
      {"m", r.m},
      {"d", format_rational(r.d)},
      {"t_found", r.t_found},
      {"bound", r.bound},
      {"back_arc_count", r.back_arc_count},
      {"forward_arc_count", r.forward_arc_count},
      {"back_bound", r.back_bound},
      {"forward_bound", r.forward_bound},
      {"inequality_holds", r.inequality_holds},
  };
}

void to_json(nlohmann::json& j, const DepthReport& r) {
  j = nlohmann::json{
      {"n", r.n},         {"m", r.m},
      {"d", format_rational(r.d)},
      {"depth", r.depth}, {"bound", r.bound},
      {"bound_holds", r.bound_holds},
  };
}

void to_json(nlohmann::json& j, const OracleResult& r) {
  j = nlohmann::json{
      {"circumference", r.circumference},
      {"longest_path_from", r.longest_path_from},
      {"node_budget", r.node_budget},
  };
}

void to_json(nlohmann::json& j, const SweepSummary& s) {
  j = nlohmann::json{
      {"n", s.n},
      {"digraphs_enumerated", s.digraphs_enumerated},
      {"eulerian_count", s.eulerian_count},
      {"cycle_checks", s.cycle_checks},
      {"path_checks", s.path_checks},
      {"failures", s.failures},
  };
}

}  // namespace dicycle
