#include "dicycle/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dicycle {

namespace {

bool parse_int(const std::string& tok, long long& value) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Digraph read_graph(std::istream& in, std::vector<std::string>* comments) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  long long arcs_seen = 0;
  std::vector<Arc> arcs;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') {
      if (comments) {
        std::string body = line.substr(1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        comments->push_back(body);
      }
      continue;
    }
    const std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) throw ParseError(lineno, "blank line not allowed");
    if (n < 0) {
      if (toks.size() != 3 || toks[0] != "p")
        throw ParseError(lineno, "expected problem line 'p <n> <m>'");
      if (!parse_int(toks[1], n) || n < 1)
        throw ParseError(lineno, "invalid vertex count '" + toks[1] + "'");
      if (!parse_int(toks[2], m) || m < 0)
        throw ParseError(lineno, "invalid arc count '" + toks[2] + "'");
      continue;
    }
    if (toks[0] != "a" || toks.size() != 3)
      throw ParseError(lineno, "expected arc line 'a <u> <v>'");
    if (arcs_seen == m) throw ParseError(lineno, "more than " + std::to_string(m) + " arc lines");
    long long u, v;
    if (!parse_int(toks[1], u) || !parse_int(toks[2], v))
      throw ParseError(lineno, "invalid arc endpoints");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "arc endpoint out of range for n=" + std::to_string(n));
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
      throw ParseError(lineno, "duplicate arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    arcs.push_back(Arc{static_cast<int>(u), static_cast<int>(v)});
    ++arcs_seen;
  }
  if (n < 0) throw ParseError(lineno, "missing problem line 'p <n> <m>'");
  if (arcs_seen != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " arc lines, got " +
                                 std::to_string(arcs_seen));
  return Digraph(static_cast<int>(n), arcs);
}

Digraph read_graph_file(const std::string& path, std::vector<std::string>* comments) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open '" + path + "'");
  return read_graph(in, comments);
}

void write_graph(std::ostream& out, const Digraph& d, std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "p " << d.n() << " " << d.m() << "\n";
  for (const Arc& a : d.arcs()) out << "a " << a.tail << " " << a.head << "\n";
}

void write_graph_file(const std::string& path, const Digraph& d,
                      std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_argument, "cannot open '" + path + "' for writing");
  write_graph(out, d, comments);
  out.flush();
  if (!out) fail(errc::invalid_argument, "write to '" + path + "' failed");
}

}  // namespace dicycle
