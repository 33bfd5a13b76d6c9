#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "specpart/graph.hpp"

namespace specpart {

// Edge-list text format:
//
//   # comment
//   n 6
//   0 1
//   1 2
//
// Vertices are 0-indexed; '#' starts a comment anywhere on a line.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": " + what);
    };
    if (!have_n) {
      if (first != "n") fail("expected header 'n <count>'");
      long long count = -1;
      if (!(ls >> count) || count <= 0) fail("vertex count must be a positive integer");
      n = static_cast<std::size_t>(count);
      have_n = true;
    } else {
      long long u = -1, v = -1;
      try {
        std::size_t pos = 0;
        u = std::stoll(first, &pos);
        if (pos != first.size()) fail("malformed vertex '" + first + "'");
      } catch (const std::logic_error&) {
        fail("malformed vertex '" + first + "'");
      }
      if (!(ls >> v)) fail("expected a pair 'u v'");
      if (u < 0 || v < 0) fail("negative vertex index");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!have_n) throw InvalidArgument("edge list is missing the 'n <count>' header");
  return Graph(n, std::move(edges));
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace specpart
