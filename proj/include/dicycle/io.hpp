#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dicycle/digraph.hpp"

namespace dicycle {

// Text graph format:
//   # comment (allowed anywhere)
//   p <n> <m>
//   a <u> <v>     exactly m of these, 0-based ids
// Errors are reported with 1-based line numbers via ParseError.
// `comments`, when non-null, receives each comment line with the leading
// "# " stripped.
Digraph read_graph(std::istream& in, std::vector<std::string>* comments = nullptr);
Digraph read_graph_file(const std::string& path, std::vector<std::string>* comments = nullptr);

// Writes the same format; arcs come out sorted by (tail, head), so the
// bytes only depend on the graph and the comments.
void write_graph(std::ostream& out, const Digraph& d, std::span<const std::string> comments = {});
void write_graph_file(const std::string& path, const Digraph& d,
                      std::span<const std::string> comments = {});

}  // namespace dicycle
