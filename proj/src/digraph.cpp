#include "dicycle/digraph.hpp"

#include <algorithm>
#include <queue>

namespace dicycle {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Digraph::Digraph(int n, std::span<const Arc> arc_list) : n_(n) {
  if (n < 1) fail(errc::empty_graph, "vertex count must be at least 1, got " + std::to_string(n));
  out_.resize(n_);
  in_.resize(n_);
  arcs_.assign(arc_list.begin(), arc_list.end());
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc a = arcs_[i];
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      fail(errc::vertex_out_of_range, "arc (" + std::to_string(a.tail) + "," +
                                          std::to_string(a.head) + ") with n=" + std::to_string(n_));
    if (a.tail == a.head) fail(errc::loop_arc, "loop at vertex " + std::to_string(a.tail));
    if (i > 0 && arcs_[i - 1] == a)
      fail(errc::duplicate_arc,
           "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") appears twice");
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (auto& lst : in_) std::sort(lst.begin(), lst.end());
  m_ = static_cast<long long>(arcs_.size());
}

Digraph::Digraph(int n, std::initializer_list<Arc> arc_list)
    : Digraph(n, std::span<const Arc>(arc_list.begin(), arc_list.size())) {}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int Digraph::out_degree(int v) const {
  check_vertex(v);
  return static_cast<int>(out_[v].size());
}

int Digraph::in_degree(int v) const {
  check_vertex(v);
  return static_cast<int>(in_[v].size());
}

std::pair<int, int> Digraph::degrees(int v) const { return {out_degree(v), in_degree(v)}; }

VertexSet::VertexSet(int universe, std::span<const int> members) : universe_(universe) {
  if (universe < 0) fail(errc::invalid_argument, "negative universe");
  mask_.assign(universe_, 0);
  for (int v : members) {
    if (v < 0 || v >= universe_)
      fail(errc::vertex_out_of_range,
           "member " + std::to_string(v) + " with universe " + std::to_string(universe_));
    if (!mask_[v]) {
      mask_[v] = 1;
      members_.push_back(v);
    }
  }
  std::sort(members_.begin(), members_.end());
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet VertexSet::full(int universe) {
  std::vector<int> all(universe);
  for (int v = 0; v < universe; ++v) all[v] = v;
  return VertexSet(universe, all);
}

namespace {

// Every vertex reachable from `start` along the given adjacency.
bool reaches_all(const std::vector<std::vector<int>>& adj, int n, int start) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const int n = d.n();
  if (n == 1) return true;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (int v = 0; v < n; ++v) {
    fwd[v] = d.out(v);
    bwd[v] = d.in(v);
  }
  return reaches_all(fwd, n, 0) && reaches_all(bwd, n, 0);
}

std::string EulerianDefect::describe() const {
  switch (kind) {
    case Kind::degree_imbalance: return "degree imbalance at " + std::to_string(vertex);
    case Kind::not_strongly_connected: return "not strongly connected";
  }
  return "unknown defect";
}

std::optional<EulerianDefect> eulerian_defect(const Digraph& d) {
  for (int v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) != d.in_degree(v))
      return EulerianDefect{EulerianDefect::Kind::degree_imbalance, v};
  }
  if (!is_strongly_connected(d))
    return EulerianDefect{EulerianDefect::Kind::not_strongly_connected, -1};
  return std::nullopt;
}

bool is_eulerian(const Digraph& d) { return !eulerian_defect(d).has_value(); }

Rational average_out_degree(const Digraph& d) { return Rational(d.m(), d.n()); }

CutCounts cut_counts(const Digraph& d, const VertexSet& w) {
  if (w.universe() != d.n()) fail(errc::invalid_argument, "subset universe does not match graph");
  CutCounts c;
  for (const Arc& a : d.arcs()) {
    const bool t = w.contains(a.tail);
    const bool h = w.contains(a.head);
    if (t && h)
      ++c.internal;
    else if (t)
      ++c.d_plus;
    else if (h)
      ++c.d_minus;
  }
  return c;
}

CutBalanceWitness cut_witness(const Digraph& d, const VertexSet& w) {
  const CutCounts c = cut_counts(d, w);
  CutBalanceWitness wit;
  wit.d_plus = c.d_plus;
  wit.d_minus = c.d_minus;
  wit.internal = c.internal;
  for (int v : w.members()) {
    wit.out_degree_sum += d.out_degree(v);
    wit.in_degree_sum += d.in_degree(v);
  }
  wit.identity_plus = (wit.d_plus == wit.out_degree_sum - wit.internal);
  wit.identity_minus = (wit.d_minus == wit.in_degree_sum - wit.internal);
  wit.balanced = (wit.d_plus == wit.d_minus);
  return wit;
}

CutBalanceWitness check_cut_balance(const Digraph& d, const VertexSet& w) {
  if (auto defect = eulerian_defect(d))
    fail(errc::not_eulerian, "cut balance requires an Eulerian digraph: " + defect->describe());
  CutBalanceWitness wit = cut_witness(d, w);
  if (!wit.identity_plus || !wit.identity_minus)
    fail(errc::internal_invariant_violation, "cut degree-sum identity failed");
  if (!wit.balanced)
    fail(errc::internal_invariant_violation,
         "d+(W)=" + std::to_string(wit.d_plus) + " != d-(W)=" + std::to_string(wit.d_minus) +
             " on an Eulerian digraph");
  return wit;
}

}  // namespace dicycle
