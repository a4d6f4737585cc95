#include "dicycle/oracle.hpp"

#include <algorithm>
#include <bit>

#include "dicycle/extraction.hpp"

namespace dicycle {

namespace {

void check_budget(const Digraph& d) {
  if (d.n() > kOracleMaxN)
    fail(errc::budget_exceeded, "brute force capped at n <= " + std::to_string(kOracleMaxN) +
                                    ", got n=" + std::to_string(d.n()));
}

struct CycleSearch {
  const Digraph& d;
  int min_vertex = 0;
  unsigned on_path = 0;
  long long best = 0;
  long long nodes = 0;

  // len = arcs from min_vertex to u along the current path;
  // avail = vertices > min_vertex not yet on the path.
  void dfs(int u, long long len, int avail) {
    ++nodes;
    if (best == d.n()) return;
    for (int w : d.out(u)) {
      if (w == min_vertex) {
        best = std::max(best, len + 1);
      } else if (w > min_vertex && !(on_path >> w & 1u)) {
        // closing later can use at most the remaining available vertices
        if (len + 1 + avail <= best) continue;
        on_path |= 1u << w;
        dfs(w, len + 1, avail - 1);
        on_path &= ~(1u << w);
      }
    }
  }
};

struct PathSearch {
  const Digraph& d;
  unsigned on_path = 0;
  long long best = 0;
  long long nodes = 0;

  void dfs(int u, long long len, int avail) {
    ++nodes;
    best = std::max(best, len);
    if (best == d.n() - 1) return;
    if (len + avail <= best) return;
    for (int w : d.out(u)) {
      if (on_path >> w & 1u) continue;
      on_path |= 1u << w;
      dfs(w, len + 1, avail - 1);
      on_path &= ~(1u << w);
    }
  }
};

}  // namespace

long long brute_circumference(const Digraph& d, long long* nodes) {
  check_budget(d);
  long long best = 0;
  long long total_nodes = 0;
  for (int s = 0; s < d.n() && best < d.n(); ++s) {
    CycleSearch search{d};
    search.min_vertex = s;
    search.best = best;
    search.on_path = 1u << s;
    search.dfs(s, 0, d.n() - 1 - s);
    best = search.best;
    total_nodes += search.nodes;
  }
  if (nodes) *nodes += total_nodes;
  return best;
}

long long brute_longest_path_from(const Digraph& d, int v, long long* nodes) {
  check_budget(d);
  d.check_vertex(v);
  PathSearch search{d};
  search.on_path = 1u << v;
  search.dfs(v, 0, d.n() - 1);
  if (nodes) *nodes += search.nodes;
  return search.best;
}

OracleResult oracle_all(const Digraph& d) {
  OracleResult r;
  r.circumference = brute_circumference(d, &r.node_budget);
  r.longest_path_from.resize(d.n());
  for (int v = 0; v < d.n(); ++v)
    r.longest_path_from[v] = brute_longest_path_from(d, v, &r.node_budget);
  return r;
}

namespace {

// One Eulerian instance inside the sweep: run everything, count failures.
void sweep_instance(const Digraph& d, SweepSummary& s) {
  auto expect = [&](bool ok, const std::string& what) {
    if (ok) return;
    ++s.failures;
    if (s.failure_samples.size() < 10) s.failure_samples.push_back(what);
  };

  const Rational avg = average_out_degree(d);
  const int n = d.n();

  std::vector<long long> path_oracle(n);
  for (int v = 0; v < n; ++v) path_oracle[v] = brute_longest_path_from(d, v);

  if (n >= 2) {
    const long long t_oracle = brute_circumference(d);
    expect(t_oracle >= 2, "Eulerian with n >= 2 must contain a cycle");

    for (int root = 0; root < n; ++root) {
      ++s.cycle_checks;
      try {
        const CycleCertificate cert = certified_long_cycle(d, root);
        expect(satisfies_bound(cert.report.t_found, avg), "cycle bound violated");
        expect(validate_cycle(d, cert.cycle.vertices), "extracted cycle invalid");
        expect(cert.report.t_found <= t_oracle, "certified length above true circumference");
      } catch (const Error& e) {
        expect(false, std::string("certified_long_cycle threw: ") + e.what());
      }
    }

    // structural checks once per instance, on the root-0 final branching
    try {
      OutBranching f(d, 0);
      finalize(f);
      const FinalityWitness w = verify_final(f);
      expect(w.final_ok, "final out-branching still has violating or same-level arcs");
      const BoundReport rep = counting_report(d, f, t_oracle);
      expect(rep.back_arc_count <= rep.back_bound, "back-arc count above n(t-1)");
      expect(rep.forward_arc_count <= rep.forward_bound, "forward-arc count above nt(t+1)/2");
      expect(rep.inequality_holds, "nd <= n(t-1) + nt(t+1)/2 failed at the circumference");
      expect(cut_chain(d, f, t_oracle).holds, "cut-sum chain failed");
      const LevelProfile prof = level_profile(f);
      std::vector<int> prefix;
      for (const auto& lvl : prof.sets) {
        prefix.insert(prefix.end(), lvl.begin(), lvl.end());
        check_cut_balance(d, VertexSet(n, prefix));
      }
    } catch (const Error& e) {
      expect(false, std::string("instance checks threw: ") + e.what());
    }
  }

  for (int start = 0; start < n; ++start) {
    ++s.path_checks;
    try {
      const PathCertificate cert = certified_long_path(d, start);
      expect(cert.report.bound_holds, "path bound violated");
      expect(validate_path(d, cert.path.vertices), "extracted path invalid");
      expect(cert.path.start() == start, "path does not start at the requested vertex");
      expect(cert.report.depth <= path_oracle[start], "certified path above true longest path");
    } catch (const Error& e) {
      expect(false, std::string("certified_long_path threw: ") + e.what());
    }
  }
}

}  // namespace

SweepSummary exhaustive_small_sweep(int n) {
  if (n < 1 || n > 5)
    fail(errc::invalid_argument, "sweep supports 1 <= n <= 5, got " + std::to_string(n));

  std::vector<Arc> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) slots.push_back(Arc{u, v});
  const int bits = static_cast<int>(slots.size());

  SweepSummary s;
  s.n = n;
  std::vector<int> out_deg(n), in_deg(n);
  std::vector<Arc> arcs;
  for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
    ++s.digraphs_enumerated;
    std::fill(out_deg.begin(), out_deg.end(), 0);
    std::fill(in_deg.begin(), in_deg.end(), 0);
    for (unsigned long long rest = mask; rest; rest &= rest - 1) {
      const Arc a = slots[std::countr_zero(rest)];
      ++out_deg[a.tail];
      ++in_deg[a.head];
    }
    bool balanced = true;
    for (int v = 0; v < n && balanced; ++v) balanced = out_deg[v] == in_deg[v];
    if (!balanced) continue;

    arcs.clear();
    for (unsigned long long rest = mask; rest; rest &= rest - 1)
      arcs.push_back(slots[std::countr_zero(rest)]);
    const Digraph d(n, arcs);
    if (!is_strongly_connected(d)) continue;

    ++s.eulerian_count;
    sweep_instance(d, s);
  }
  return s;
}

}  // namespace dicycle
