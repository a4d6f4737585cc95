#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dicycle/digraph.hpp"

namespace dicycle {

// Classification of an arc (u,v) of the host digraph relative to an
// out-branching F:
//   tree              parent arc of F
//   back              v is a proper ancestor of u in F
//   forward_non_tree  non-tree arc with level(u) < level(v)
//   violating         level(u) >= level(v) and v is not an ancestor of u;
//                     the trigger for an elementary operation
// Every arc falls in exactly one class.
enum class ArcClass { tree, forward_non_tree, back, violating };

const char* arc_class_name(ArcClass c);

struct TraceEvent {
  int op_index = 0;  // 1-based
  int tail = 0;
  int head = 0;
  long long delta = 0;      // level increase applied to head's subtree
  long long level_sum = 0;  // after the operation
};

// "op <u> <v> delta=<k> level_sum=<s>"
std::string format_trace(const TraceEvent& e);

using TraceSink = std::function<void(const TraceEvent&)>;

// Spanning out-tree of a host digraph, rooted, with per-vertex levels
// (= distance from the root within the tree). The constructor builds the
// breadth-first tree, scanning out-neighbors in ascending id order, so
// initial levels equal shortest-path distances and construction is
// deterministic.
//
// Mutation happens only through apply_elementary (and finalize); a value is
// single-writer but freely copyable and movable across threads.
class OutBranching {
public:
  OutBranching(const Digraph& host, int root);

  const Digraph& host() const { return *host_; }
  int n() const { return host_->n(); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }  // -1 at the root
  int level(int v) const { return level_[v]; }
  const std::vector<int>& parents() const { return parent_; }
  const std::vector<int>& levels() const { return level_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  long long level_sum() const { return level_sum_; }
  int depth() const;

  // a lies on the parent chain of v (or a == v).
  bool is_ancestor(int a, int v) const;

  ArcClass classify(int u, int v) const;  // throws arc_not_in_graph
  ArcClass classify(Arc a) const { return classify(a.tail, a.head); }

  // First violating arc in ascending (tail, head) order, nullopt iff the
  // branching is final.
  std::optional<Arc> find_violating() const;

  // Reparents a.head under a.tail and lifts the head's whole subtree by
  // level(tail)+1-level(head) >= 1. Requires classify(a) == violating.
  void apply_elementary(Arc a);

  // Full structural audit; throws internal_invariant_violation on any
  // breach. Test builds run this after every elementary operation.
  void check_valid() const;

private:
  bool is_proper_ancestor(int a, int v) const;

  const Digraph* host_;
  int root_;
  std::vector<int> parent_;
  std::vector<int> level_;
  std::vector<std::vector<int>> children_;
  long long level_sum_ = 0;
};

// Applies elementary operations, always to the first violating arc in
// ascending (tail, head) order, until none remains. Returns the operation
// count, which is at most n(n-1) because the level sum strictly increases
// and every level stays below n; exceeding that budget throws
// termination_budget_exceeded (it would mean the operation is broken).
long long finalize(OutBranching& f, const TraceSink& trace = {});

// Per-class census of all host arcs against F. final_ok holds iff there are
// no violating arcs and no arc joins two vertices of the same level, which
// is exactly what finalize establishes.
struct FinalityWitness {
  std::vector<std::pair<Arc, ArcClass>> classes;  // per arc, host order
  long long tree_count = 0;
  long long forward_non_tree_count = 0;
  long long back_count = 0;
  long long violating_count = 0;
  std::vector<Arc> violating;
  std::vector<Arc> same_level;
  bool final_ok = false;
};

FinalityWitness verify_final(const OutBranching& f);

// Vertices grouped by level. Levels of an out-branching are contiguous, so
// sets[i] is nonempty for every i up to depth.
struct LevelProfile {
  std::vector<std::vector<int>> sets;
  long long level_sum = 0;
};

LevelProfile level_profile(const OutBranching& f);

// The unique tree path from ancestor to descendant; throws not_ancestor.
std::vector<int> tree_path(const OutBranching& f, int ancestor, int descendant);

}  // namespace dicycle
