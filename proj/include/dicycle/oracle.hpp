#pragma once

#include <string>
#include <vector>

#include "dicycle/digraph.hpp"

namespace dicycle {

// Exhaustive search is capped at this many vertices.
inline constexpr int kOracleMaxN = 14;

// Exact circumference (longest directed cycle; 0 if none) by depth-first
// enumeration of simple cycles through their minimum vertex, pruned by the
// remaining-vertex bound. Throws budget_exceeded when n > kOracleMaxN.
// `nodes`, when non-null, accumulates the number of search nodes expanded.
long long brute_circumference(const Digraph& d, long long* nodes = nullptr);

// Exact maximum simple-path length (arc count) starting at v.
long long brute_longest_path_from(const Digraph& d, int v, long long* nodes = nullptr);

struct OracleResult {
  long long circumference = 0;
  std::vector<long long> longest_path_from;  // per start vertex
  long long node_budget = 0;                 // search nodes expanded in total
};

OracleResult oracle_all(const Digraph& d);

// Enumerates every labeled digraph on n vertices, filters the Eulerian
// ones (degree balance first, then strong connectivity), and runs the
// whole certification pipeline plus the brute-force oracle on each:
// certified cycles from every root, certified paths from every start,
// finality, counting bounds against the oracle circumference, the cut-sum
// chain and cut balance on every level prefix. Failures are counted, never
// thrown.
struct SweepSummary {
  int n = 0;
  long long digraphs_enumerated = 0;
  long long eulerian_count = 0;
  long long cycle_checks = 0;
  long long path_checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_samples;  // first few, for diagnostics
};

SweepSummary exhaustive_small_sweep(int n);  // 1 <= n <= 5

}  // namespace dicycle
