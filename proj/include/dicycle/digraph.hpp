#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dicycle/error.hpp"

namespace dicycle {

// Exact rational, used for the average out-degree d = m/n so that bound
// comparisons never go through floating point.
using Rational = boost::rational<long long>;

// "3/2"; integral values print without the denominator.
std::string format_rational(const Rational& r);

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Simple digraph on vertices 0..n-1: no loops, no multiple arcs.
// Immutable after construction; adjacency lists are sorted ascending, so
// every traversal in this library is deterministic regardless of the order
// arcs were supplied in.
class Digraph {
public:
  // Rejects n < 1, loops, duplicate arcs and out-of-range endpoints.
  Digraph(int n, std::span<const Arc> arc_list);
  Digraph(int n, std::initializer_list<Arc> arc_list);

  int n() const { return n_; }
  long long m() const { return m_; }

  // All arcs, sorted by (tail, head).
  std::span<const Arc> arcs() const { return arcs_; }

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  bool has_arc(int u, int v) const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  std::pair<int, int> degrees(int v) const;  // (out, in)

  void check_vertex(int v) const;

private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<Arc> arcs_;
};

// Subset of V(D). Members are stored sorted and deduplicated; out-of-range
// ids are rejected.
class VertexSet {
public:
  VertexSet(int universe, std::span<const int> members);
  VertexSet(int universe, std::initializer_list<int> members);

  static VertexSet empty(int universe) { return VertexSet(universe, {}); }
  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const { return v >= 0 && v < universe_ && mask_[v] != 0; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

private:
  int universe_ = 0;
  std::vector<char> mask_;
  std::vector<int> members_;
};

bool is_strongly_connected(const Digraph& d);

struct EulerianDefect {
  enum class Kind { degree_imbalance, not_strongly_connected };
  Kind kind;
  int vertex = -1;  // smallest imbalanced vertex when kind == degree_imbalance

  std::string describe() const;
};

// nullopt iff d is Eulerian. Degree balance is checked before connectivity,
// so an imbalanced disconnected graph reports the imbalance.
std::optional<EulerianDefect> eulerian_defect(const Digraph& d);

bool is_eulerian(const Digraph& d);

Rational average_out_degree(const Digraph& d);

struct CutCounts {
  long long d_plus = 0;   // arcs from W to V \ W
  long long d_minus = 0;  // arcs from V \ W to W
  long long internal = 0; // arcs inside W

  friend bool operator==(const CutCounts&, const CutCounts&) = default;
};

CutCounts cut_counts(const Digraph& d, const VertexSet& w);

// The two degree-sum identities and the balance check. The cut counts come
// from a direct arc scan; the degree sums are an independent route, so the
// identity booleans cross-check the two.
struct CutBalanceWitness {
  long long d_plus = 0;
  long long d_minus = 0;
  long long internal = 0;
  long long out_degree_sum = 0;  // sum of out-degrees over W
  long long in_degree_sum = 0;   // sum of in-degrees over W
  bool identity_plus = false;    // d_plus == out_degree_sum - internal
  bool identity_minus = false;   // d_minus == in_degree_sum - internal
  bool balanced = false;         // d_plus == d_minus
};

// Works on any digraph; balanced may legitimately be false here.
CutBalanceWitness cut_witness(const Digraph& d, const VertexSet& w);

// Requires an Eulerian digraph and throws internal_invariant_violation if
// the returned witness would not be balanced: on Eulerian inputs an
// imbalance is a bug, not a data point.
CutBalanceWitness check_cut_balance(const Digraph& d, const VertexSet& w);

}  // namespace dicycle
