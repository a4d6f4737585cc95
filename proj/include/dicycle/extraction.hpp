#pragma once

#include <span>
#include <string>
#include <vector>

#include "dicycle/branching.hpp"
#include "dicycle/digraph.hpp"

namespace dicycle {

// Vertex sequence of a directed cycle; the closing arc back to the first
// vertex is implicit. length == number of vertices == number of arcs.
struct DirectedCycle {
  std::vector<int> vertices;

  long long length() const { return static_cast<long long>(vertices.size()); }
};

// Vertex sequence of a directed path; length counts arcs.
struct DirectedPath {
  std::vector<int> vertices;

  long long length() const { return static_cast<long long>(vertices.size()) - 1; }
  int start() const { return vertices.front(); }
};

bool validate_cycle(const Digraph& d, const std::vector<int>& vertices);
bool validate_path(const Digraph& d, const std::vector<int>& vertices);

// sqrt(2d) - 3/2, the certified lower bound on cycle length.
double bound_value(const Rational& d);

// Exact form of t >= sqrt(2d) - 3/2: (2t+3)^2 >= 8d over the integers,
// so acceptance near the boundary never depends on rounding.
bool satisfies_bound(long long t, const Rational& d);

// All counted quantities from the extraction, against a length t (either
// the certified length or the true circumference). forward_arc_count
// includes the tree arcs. inequality_holds is the exact comparison
// n*d <= n(t-1) + n*t(t+1)/2, i.e. m <= back_bound + forward_bound.
struct BoundReport {
  long long n = 0;
  long long m = 0;
  Rational d;
  long long t_found = 0;
  double bound = 0.0;
  long long back_arc_count = 0;
  long long forward_arc_count = 0;
  long long back_bound = 0;     // n(t-1)
  long long forward_bound = 0;  // n*t(t+1)/2
  bool inequality_holds = false;
};

// Closes the back arc a = (u,v) with the tree path from v down to u:
// cycle = v, ..., u plus the arc uv. Length = level(u) - level(v) + 1.
DirectedCycle cycle_from_back_arc(const OutBranching& f, Arc a);

struct CycleCertificate {
  DirectedCycle cycle;
  BoundReport report;
  int root = 0;
};

// Finalizes the breadth-first out-branching rooted at `root` and returns
// the cycle closed by a maximum-span back arc. The returned length t*
// always satisfies (2t*+3)^2 >= 8d; the function verifies this and the
// cycle itself before returning and throws internal_invariant_violation
// if either fails, since a failure would falsify the bound.
CycleCertificate certified_long_cycle(const Digraph& d, int root);

struct DepthReport {
  long long n = 0;
  long long m = 0;
  Rational d;
  long long depth = 0;
  double bound = 0.0;
  bool bound_holds = false;  // (2*depth+3)^2 >= 8d, exact
};

struct PathCertificate {
  DirectedPath path;
  DepthReport report;
};

// Root-to-deepest-leaf path of the final out-branching rooted at `start`.
// Its length (the tree depth) always satisfies the same exact bound; this
// is verified before returning, as above.
PathCertificate certified_long_path(const Digraph& d, int start);

// Counts back/forward arcs of a final out-branching and evaluates the
// counting bounds at the supplied t. Throws not_final when f still admits
// an elementary operation and internal_invariant_violation if the classes
// do not partition the arc set into back + forward.
BoundReport counting_report(const Digraph& d, const OutBranching& f, long long t);

// The cut-sum chain behind the forward-arc bound, evaluated on the level
// prefixes of f:
//   per prefix:  d+(L<=i) == d-(L<=i)  and  d-(L<=i) <= sum_j (t+1-j)|L_{i+j}|
//   totals:      sum_i d+(L<=i) == total level jump over forward arcs
//                sum_i d+(L<=i) <= sum_i sum_j (t+1-j)|L_{i+j}|
struct PrefixCut {
  int i = 0;
  long long d_plus = 0;
  long long d_minus = 0;
  long long majorant = 0;
};

struct CutChainWitness {
  std::vector<PrefixCut> prefixes;
  long long lhs_total = 0;           // sum of d+(L<=i)
  long long rhs_total = 0;           // sum of majorants
  long long forward_jump_total = 0;  // sum of level(head)-level(tail) over forward arcs
  bool per_prefix_ok = false;
  bool totals_ok = false;
  bool jump_identity_ok = false;
  bool holds = false;
};

CutChainWitness cut_chain(const Digraph& d, const OutBranching& f, long long t);

struct RootSweepResult {
  DirectedCycle best;
  int best_root = -1;
  BoundReport best_report;
  std::vector<std::pair<int, long long>> per_root;  // (root, certified length)
};

// certified_long_cycle over each given root; maximum length wins, ties go
// to the lowest root id.
RootSweepResult best_over_roots(const Digraph& d, std::span<const int> roots);

}  // namespace dicycle
