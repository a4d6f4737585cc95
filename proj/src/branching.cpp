#include "dicycle/branching.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dicycle {

const char* arc_class_name(ArcClass c) {
  switch (c) {
    case ArcClass::tree: return "tree";
    case ArcClass::forward_non_tree: return "forward";
    case ArcClass::back: return "back";
    case ArcClass::violating: return "violating";
  }
  return "?";
}

std::string format_trace(const TraceEvent& e) {
  std::ostringstream ss;
  ss << "op " << e.tail << " " << e.head << " delta=" << e.delta << " level_sum=" << e.level_sum;
  return ss.str();
}

OutBranching::OutBranching(const Digraph& host, int root) : host_(&host), root_(root) {
  host.check_vertex(root);
  const int n = host.n();
  parent_.assign(n, -1);
  level_.assign(n, -1);
  children_.assign(n, {});
  std::queue<int> queue;
  level_[root_] = 0;
  queue.push(root_);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : host.out(u)) {  // ascending
      if (level_[w] < 0) {
        level_[w] = level_[u] + 1;
        parent_[w] = u;
        children_[u].push_back(w);
        level_sum_ += level_[w];
        queue.push(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (level_[v] < 0)
      fail(errc::unreachable,
           "vertex " + std::to_string(v) + " not reachable from root " + std::to_string(root_));
  }
}

int OutBranching::depth() const { return *std::max_element(level_.begin(), level_.end()); }

bool OutBranching::is_ancestor(int a, int v) const {
  // Climb only while strictly deeper than a; each level has one ancestor.
  const int target = level_[a];
  while (level_[v] > target) v = parent_[v];
  return v == a;
}

bool OutBranching::is_proper_ancestor(int a, int v) const { return a != v && is_ancestor(a, v); }

ArcClass OutBranching::classify(int u, int v) const {
  if (!host_->has_arc(u, v))
    fail(errc::arc_not_in_graph, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  if (parent_[v] == u) return ArcClass::tree;
  if (is_proper_ancestor(v, u)) return ArcClass::back;
  if (level_[u] < level_[v]) return ArcClass::forward_non_tree;
  return ArcClass::violating;
}

std::optional<Arc> OutBranching::find_violating() const {
  const int n = host_->n();
  for (int u = 0; u < n; ++u) {
    for (int v : host_->out(u)) {
      if (parent_[v] == u) continue;
      if (level_[u] < level_[v]) continue;
      if (is_proper_ancestor(v, u)) continue;
      return Arc{u, v};
    }
  }
  return std::nullopt;
}

void OutBranching::apply_elementary(Arc a) {
  if (classify(a) != ArcClass::violating)
    fail(errc::not_violating, "(" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                  ") is " + arc_class_name(classify(a)));
  const int u = a.tail;
  const int v = a.head;
  const long long delta = static_cast<long long>(level_[u]) + 1 - level_[v];

  auto& old_siblings = children_[parent_[v]];
  old_siblings.erase(std::find(old_siblings.begin(), old_siblings.end(), v));
  parent_[v] = u;
  children_[u].push_back(v);

  // Lift v's subtree by delta.
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    level_[x] += static_cast<int>(delta);
    level_sum_ += delta;
    for (int c : children_[x]) stack.push_back(c);
  }
}

void OutBranching::check_valid() const {
  const Digraph& host = *host_;
  const int n = host.n();
  auto bad = [](const std::string& msg) { fail(errc::internal_invariant_violation, msg); };
  if (root_ < 0 || root_ >= n) bad("root out of range");
  if (parent_[root_] != -1) bad("root has a parent");
  if (level_[root_] != 0) bad("root not at level 0");
  long long sum = 0;
  for (int v = 0; v < n; ++v) {
    sum += level_[v];
    if (v == root_) continue;
    const int p = parent_[v];
    if (p < 0 || p >= n) bad("vertex " + std::to_string(v) + " has no parent");
    if (!host.has_arc(p, v)) bad("parent arc (" + std::to_string(p) + "," + std::to_string(v) +
                                 ") is not a host arc");
    if (level_[v] != level_[p] + 1) bad("level mismatch at vertex " + std::to_string(v));
  }
  if (sum != level_sum_) bad("stale level_sum");
  // children lists must mirror parent pointers and reach every vertex
  int seen = 0;
  std::vector<char> visited(n, 0);
  std::vector<int> stack{root_};
  visited[root_] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : children_[x]) {
      if (parent_[c] != x) bad("children list inconsistent at " + std::to_string(x));
      if (visited[c]) bad("vertex " + std::to_string(c) + " visited twice");
      visited[c] = 1;
      stack.push_back(c);
    }
  }
  if (seen != n) bad("tree does not span: reached " + std::to_string(seen) + " of " +
                     std::to_string(n));
}

long long finalize(OutBranching& f, const TraceSink& trace) {
  const long long budget = static_cast<long long>(f.n()) * (f.n() - 1);
  long long ops = 0;
  while (auto arc = f.find_violating()) {
    if (ops + 1 > budget)
      fail(errc::termination_budget_exceeded,
           "more than n(n-1)=" + std::to_string(budget) + " elementary operations");
    const long long before = f.level_sum();
    f.apply_elementary(*arc);
    ++ops;
    if (trace) {
      TraceEvent e;
      e.op_index = static_cast<int>(ops);
      e.tail = arc->tail;
      e.head = arc->head;
      e.delta = f.level_sum() - before;
      e.level_sum = f.level_sum();
      trace(e);
    }
  }
  return ops;
}

FinalityWitness verify_final(const OutBranching& f) {
  FinalityWitness w;
  for (const Arc& a : f.host().arcs()) {
    const ArcClass c = f.classify(a);
    w.classes.emplace_back(a, c);
    switch (c) {
      case ArcClass::tree: ++w.tree_count; break;
      case ArcClass::forward_non_tree: ++w.forward_non_tree_count; break;
      case ArcClass::back: ++w.back_count; break;
      case ArcClass::violating:
        ++w.violating_count;
        w.violating.push_back(a);
        break;
    }
    if (f.level(a.tail) == f.level(a.head)) w.same_level.push_back(a);
  }
  w.final_ok = w.violating_count == 0 && w.same_level.empty();
  return w;
}

LevelProfile level_profile(const OutBranching& f) {
  LevelProfile p;
  p.sets.resize(static_cast<std::size_t>(f.depth()) + 1);
  for (int v = 0; v < f.n(); ++v) p.sets[f.level(v)].push_back(v);
  p.level_sum = f.level_sum();
  return p;
}

std::vector<int> tree_path(const OutBranching& f, int ancestor, int descendant) {
  f.host().check_vertex(ancestor);
  f.host().check_vertex(descendant);
  std::vector<int> path;
  int v = descendant;
  while (v != ancestor) {
    path.push_back(v);
    v = f.parent(v);
    if (v < 0)
      fail(errc::not_ancestor, std::to_string(ancestor) + " is not an ancestor of " +
                                   std::to_string(descendant));
  }
  path.push_back(ancestor);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dicycle
