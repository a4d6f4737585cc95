#include "dicycle/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dicycle {

bool validate_cycle(const Digraph& d, const std::vector<int>& vertices) {
  const std::size_t k = vertices.size();
  if (k < 2) return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= d.n()) return false;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!d.has_arc(vertices[i], vertices[(i + 1) % k])) return false;
  }
  return true;
}

bool validate_path(const Digraph& d, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  std::vector<char> seen(d.n(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= d.n()) return false;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!d.has_arc(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

double bound_value(const Rational& d) {
  return std::sqrt(2.0 * boost::rational_cast<double>(d)) - 1.5;
}

bool satisfies_bound(long long t, const Rational& d) {
  // (2t+3)^2 >= 8d  <=>  (2t+3)^2 * den >= 8 * num
  const long long lhs = (2 * t + 3) * (2 * t + 3);
  return lhs * d.denominator() >= 8 * d.numerator();
}

DirectedCycle cycle_from_back_arc(const OutBranching& f, Arc a) {
  if (f.classify(a) != ArcClass::back)
    fail(errc::not_back_arc, "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") is " +
                                 arc_class_name(f.classify(a)));
  DirectedCycle c;
  c.vertices = tree_path(f, a.head, a.tail);
  return c;
}

namespace {

BoundReport make_report(const Digraph& d, const FinalityWitness& w, long long t) {
  BoundReport r;
  r.n = d.n();
  r.m = d.m();
  r.d = average_out_degree(d);
  r.t_found = t;
  r.bound = bound_value(r.d);
  r.back_arc_count = w.back_count;
  r.forward_arc_count = w.tree_count + w.forward_non_tree_count;
  r.back_bound = r.n * (t - 1);
  r.forward_bound = r.n * (t * (t + 1) / 2);
  r.inequality_holds = r.m <= r.back_bound + r.forward_bound;
  if (r.back_arc_count + r.forward_arc_count != r.m)
    fail(errc::internal_invariant_violation,
         "arcs of a final out-branching must split into back + forward");
  return r;
}

// Maximum-span back arc, first in ascending (tail, head) order among ties.
std::optional<Arc> max_span_back_arc(const OutBranching& f) {
  std::optional<Arc> best;
  long long best_span = 0;
  for (const Arc& a : f.host().arcs()) {
    if (f.classify(a) != ArcClass::back) continue;
    const long long span = f.level(a.tail) - f.level(a.head);
    if (!best || span > best_span) {
      best = a;
      best_span = span;
    }
  }
  return best;
}

void require_eulerian(const Digraph& d, const std::string& op) {
  if (auto defect = eulerian_defect(d)) fail(errc::not_eulerian, op + ": " + defect->describe());
}

}  // namespace

CycleCertificate certified_long_cycle(const Digraph& d, int root) {
  require_eulerian(d, "certified_long_cycle");
  if (d.n() < 2) fail(errc::invalid_argument, "certified_long_cycle needs n >= 2");
  d.check_vertex(root);

  OutBranching f(d, root);
  finalize(f);
  const FinalityWitness w = verify_final(f);
  if (!w.final_ok)
    fail(errc::internal_invariant_violation, "finalize left a non-final out-branching");

  const auto arc = max_span_back_arc(f);
  if (!arc)
    fail(errc::no_back_arc,
         "final out-branching of an Eulerian digraph with n >= 2 must have a back arc");

  CycleCertificate cert;
  cert.root = root;
  cert.cycle = cycle_from_back_arc(f, *arc);
  cert.report = make_report(d, w, cert.cycle.length());

  if (!validate_cycle(d, cert.cycle.vertices))
    fail(errc::internal_invariant_violation, "extracted cycle is not a cycle of the digraph");
  if (!satisfies_bound(cert.report.t_found, cert.report.d))
    fail(errc::internal_invariant_violation,
         "certified cycle length " + std::to_string(cert.report.t_found) +
             " falls below sqrt(2d)-3/2 with d=" + format_rational(cert.report.d));
  return cert;
}

PathCertificate certified_long_path(const Digraph& d, int start) {
  require_eulerian(d, "certified_long_path");
  d.check_vertex(start);

  OutBranching f(d, start);
  finalize(f);

  int deepest = 0;
  for (int v = 1; v < d.n(); ++v) {
    if (f.level(v) > f.level(deepest)) deepest = v;  // lowest id wins ties
  }

  PathCertificate cert;
  cert.path.vertices = tree_path(f, start, deepest);
  cert.report.n = d.n();
  cert.report.m = d.m();
  cert.report.d = average_out_degree(d);
  cert.report.depth = f.level(deepest);
  cert.report.bound = bound_value(cert.report.d);
  cert.report.bound_holds = satisfies_bound(cert.report.depth, cert.report.d);

  if (!validate_path(d, cert.path.vertices) || cert.path.length() != cert.report.depth)
    fail(errc::internal_invariant_violation, "extracted path is not a path of the digraph");
  if (!cert.report.bound_holds)
    fail(errc::internal_invariant_violation,
         "deepest-path length " + std::to_string(cert.report.depth) +
             " falls below sqrt(2d)-3/2 with d=" + format_rational(cert.report.d));
  return cert;
}

BoundReport counting_report(const Digraph& d, const OutBranching& f, long long t) {
  const FinalityWitness w = verify_final(f);
  if (!w.final_ok)
    fail(errc::not_final, std::to_string(w.violating_count) + " violating and " +
                              std::to_string(w.same_level.size()) + " same-level arcs remain");
  return make_report(d, w, t);
}

CutChainWitness cut_chain(const Digraph& d, const OutBranching& f, long long t) {
  const LevelProfile prof = level_profile(f);
  const int depth = static_cast<int>(prof.sets.size()) - 1;

  CutChainWitness w;
  w.per_prefix_ok = true;
  std::vector<int> prefix;
  for (int i = 0; i <= depth; ++i) {
    for (int v : prof.sets[i]) prefix.push_back(v);
    const CutCounts c = cut_counts(d, VertexSet(d.n(), prefix));
    PrefixCut pc;
    pc.i = i;
    pc.d_plus = c.d_plus;
    pc.d_minus = c.d_minus;
    for (long long j = 1; j <= t; ++j) {
      const long long lvl = i + j;
      if (lvl > depth) break;
      pc.majorant += (t + 1 - j) * static_cast<long long>(prof.sets[lvl].size());
    }
    if (pc.d_plus != pc.d_minus || pc.d_minus > pc.majorant) w.per_prefix_ok = false;
    w.lhs_total += pc.d_plus;
    w.rhs_total += pc.majorant;
    w.prefixes.push_back(pc);
  }
  for (const Arc& a : d.arcs()) {
    const long long jump = f.level(a.head) - f.level(a.tail);
    if (jump > 0) w.forward_jump_total += jump;
  }
  w.totals_ok = w.lhs_total <= w.rhs_total;
  w.jump_identity_ok = w.lhs_total == w.forward_jump_total;
  w.holds = w.per_prefix_ok && w.totals_ok && w.jump_identity_ok;
  return w;
}

RootSweepResult best_over_roots(const Digraph& d, std::span<const int> roots) {
  if (roots.empty()) fail(errc::invalid_argument, "best_over_roots needs at least one root");
  RootSweepResult result;
  long long best_len = -1;
  for (int root : roots) {
    CycleCertificate cert = certified_long_cycle(d, root);
    const long long len = cert.cycle.length();
    result.per_root.emplace_back(root, len);
    if (len > best_len || (len == best_len && root < result.best_root)) {
      best_len = len;
      result.best = std::move(cert.cycle);
      result.best_report = cert.report;
      result.best_root = root;
    }
  }
  return result;
}

}  // namespace dicycle
