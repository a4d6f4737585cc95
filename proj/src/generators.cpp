#include "dicycle/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace dicycle {

namespace {

void ensure_eulerian(const Digraph& d, const std::string& family) {
  if (auto defect = eulerian_defect(d))
    fail(errc::internal_invariant_violation,
         family + " generator produced a non-Eulerian digraph: " + defect->describe());
}

}  // namespace

Digraph gen_complete(int n) {
  if (n < 2) fail(errc::invalid_argument, "complete digraph needs n >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.push_back(Arc{u, v});
  Digraph d(n, arcs);
  ensure_eulerian(d, "complete");
  return d;
}

Digraph gen_circulant(int n, std::span<const int> steps) {
  if (n < 2) fail(errc::invalid_argument, "circulant needs n >= 2");
  if (steps.empty()) fail(errc::invalid_argument, "circulant needs a nonempty step set");
  std::set<int> step_set;
  for (int s : steps) {
    if (s < 1 || s > n - 1)
      fail(errc::invalid_argument, "step " + std::to_string(s) + " outside 1.." + std::to_string(n - 1));
    if (!step_set.insert(s).second)
      fail(errc::invalid_argument, "step " + std::to_string(s) + " given twice");
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * step_set.size());
  for (int i = 0; i < n; ++i)
    for (int s : step_set) arcs.push_back(Arc{i, (i + s) % n});
  Digraph d(n, arcs);
  if (!is_strongly_connected(d)) {
    std::ostringstream ss;
    ss << "circulant on " << n << " vertices with steps {";
    for (int s : step_set) ss << s << (s == *step_set.rbegin() ? "" : ",");
    ss << "} is not strongly connected";
    fail(errc::not_strongly_connected, ss.str());
  }
  ensure_eulerian(d, "circulant");
  return d;
}

Digraph gen_cycle_union(int n, int k, std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_argument, "cycle union needs n >= 2");
  if (k < 1 || k > n - 1)
    fail(errc::invalid_argument, "cycle count k must be in 1..n-1, got " + std::to_string(k));

  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> used;
  std::vector<int> perm(n);
  std::vector<Arc> arcs;

  for (int c = 0; c < k; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      for (int i = 0; i < n; ++i) perm[i] = i;
      // Fisher-Yates; the modulo draw keeps the stream platform-independent.
      for (int i = n - 1; i >= 1; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
      }
      bool fresh = true;
      for (int i = 0; i < n && fresh; ++i)
        fresh = !used.count({perm[i], perm[(i + 1) % n]});
      if (!fresh) continue;
      for (int i = 0; i < n; ++i) {
        used.insert({perm[i], perm[(i + 1) % n]});
        arcs.push_back(Arc{perm[i], perm[(i + 1) % n]});
      }
      placed = true;
    }
    if (!placed)
      fail(errc::retry_budget_exceeded, "could not place cycle " + std::to_string(c + 1) + " of " +
                                            std::to_string(k) + " after 1000 attempts");
  }
  Digraph d(n, arcs);
  ensure_eulerian(d, "cycle_union");
  return d;
}

Digraph GenSpec::generate() const {
  switch (family) {
    case Family::complete: return gen_complete(n);
    case Family::circulant: return gen_circulant(n, steps);
    case Family::cycle_union: return gen_cycle_union(n, k, seed);
  }
  fail(errc::invalid_argument, "unknown family");
}

const char* GenSpec::family_name() const {
  switch (family) {
    case Family::complete: return "complete";
    case Family::circulant: return "circulant";
    case Family::cycle_union: return "cycle_union";
  }
  return "?";
}

GenSpec::Family GenSpec::parse_family(const std::string& name) {
  if (name == "complete") return Family::complete;
  if (name == "circulant") return Family::circulant;
  if (name == "cycle_union") return Family::cycle_union;
  fail(errc::invalid_argument, "unknown family '" + name + "'");
}

std::string GenSpec::name() const {
  std::ostringstream ss;
  ss << family_name() << "(n=" << n;
  if (family == Family::circulant) {
    ss << ",steps=";
    for (std::size_t i = 0; i < steps.size(); ++i) ss << (i ? "," : "") << steps[i];
  } else if (family == Family::cycle_union) {
    ss << ",k=" << k << ",seed=" << seed;
  }
  ss << ")";
  return ss.str();
}

std::string GenSpec::to_comment() const {
  std::ostringstream ss;
  ss << "gen family=" << family_name() << " n=" << n;
  if (family == Family::circulant) {
    ss << " steps=";
    for (std::size_t i = 0; i < steps.size(); ++i) ss << (i ? "," : "") << steps[i];
  } else if (family == Family::cycle_union) {
    ss << " k=" << k << " seed=" << seed;
  }
  return ss.str();
}

GenSpec GenSpec::parse_comment(const std::string& comment) {
  std::istringstream ss(comment);
  std::string tok;
  ss >> tok;
  if (tok != "gen") fail(errc::parse_error, "gen comment must start with 'gen'");
  GenSpec spec;
  bool have_family = false, have_n = false;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    try {
      if (key == "family") {
        spec.family = parse_family(value);
        have_family = true;
      } else if (key == "n") {
        spec.n = std::stoi(value);
        have_n = true;
      } else if (key == "steps") {
        std::istringstream sv(value);
        std::string item;
        while (std::getline(sv, item, ',')) spec.steps.push_back(std::stoi(item));
      } else if (key == "k") {
        spec.k = std::stoi(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else {
        fail(errc::parse_error, "unknown gen key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "invalid value '" + value + "' for gen key '" + key + "'");
    }
  }
  if (!have_family || !have_n) fail(errc::parse_error, "gen comment needs family= and n=");
  return spec;
}

}  // namespace dicycle
