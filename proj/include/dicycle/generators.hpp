#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dicycle/digraph.hpp"

namespace dicycle {

// All n(n-1) arcs; Eulerian with d = n-1.
Digraph gen_complete(int n);

// Arcs i -> (i+s) mod n for every step s; d-regular with d = |steps|.
// Throws not_strongly_connected when the steps and n share a common factor
// that splits the vertices (e.g. n=6, steps={2,4}).
Digraph gen_circulant(int n, std::span<const int> steps);

// Union of k arc-disjoint uniformly shuffled Hamiltonian cycles; Eulerian
// with d = k. A cycle that would duplicate an existing arc is resampled as
// a whole, up to 1000 attempts, then retry_budget_exceeded. Shuffling is
// Fisher-Yates over std::mt19937_64, so output for a fixed seed is
// identical on every platform.
Digraph gen_cycle_union(int n, int k, std::uint64_t seed);

struct GenSpec {
  enum class Family { complete, circulant, cycle_union };

  Family family = Family::complete;
  int n = 0;
  std::vector<int> steps;     // circulant
  int k = 0;                  // cycle_union
  std::uint64_t seed = 0;     // cycle_union

  // Every generated graph is checked to be Eulerian before being returned.
  Digraph generate() const;

  std::string name() const;  // e.g. "circulant(n=12,steps=1,2,3)"

  // Graph-file comment body, "gen family=<f> n=<n> ...", and its inverse.
  std::string to_comment() const;
  static GenSpec parse_comment(const std::string& comment);

  static Family parse_family(const std::string& name);
  const char* family_name() const;
};

}  // namespace dicycle
