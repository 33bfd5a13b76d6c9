#pragma once

#include <string>
#include <vector>

#include "specpart/graph.hpp"

namespace specpart {

inline Graph path_graph(std::size_t m) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < m; ++i) es.push_back({i, i + 1});
  return Graph(m, std::move(es));
}

inline Graph cycle_graph(std::size_t m) {
  if (m < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i) es.push_back({i, (i + 1) % m});
  return Graph(m, std::move(es));
}

inline Graph complete_graph(std::size_t m) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) es.push_back({i, j});
  return Graph(m, std::move(es));
}

// Parts {0..p-1} and {p..p+q-1}.
inline Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw InvalidArgument("complete bipartite parts must be nonempty");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) es.push_back({i, p + j});
  return Graph(p + q, std::move(es));
}

inline Graph hypercube_graph(std::size_t d) {
  if (d >= 20) throw InvalidArgument("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> es;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) es.push_back({v, w});
    }
  return Graph(n, std::move(es));
}

/// Named standard graph on m vertices.
///   path, cycle, complete        no extra parameters
///   complete_bipartite p q       p + q == m
///   hypercube [d]                m == 2^d
inline Graph base_graph(const std::string& kind, std::size_t m, const std::vector<std::size_t>& extra = {}) {
  if (m == 0) throw InvalidArgument("base graph needs at least one vertex");
  auto no_extra = [&] {
    if (!extra.empty()) throw InvalidArgument("'" + kind + "' takes no extra parameters");
  };
  if (kind == "path") {
    no_extra();
    return path_graph(m);
  }
  if (kind == "cycle") {
    no_extra();
    return cycle_graph(m);
  }
  if (kind == "complete") {
    no_extra();
    return complete_graph(m);
  }
  if (kind == "complete_bipartite") {
    if (extra.size() != 2) throw InvalidArgument("complete_bipartite needs parameters p q");
    if (extra[0] + extra[1] != m)
      throw InvalidArgument("complete_bipartite " + std::to_string(extra[0]) + " " + std::to_string(extra[1]) +
                            " does not have " + std::to_string(m) + " vertices");
    return complete_bipartite_graph(extra[0], extra[1]);
  }
  if (kind == "hypercube") {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < m) ++d;
    if ((std::size_t{1} << d) != m) throw InvalidArgument("hypercube order must be a power of two");
    if (extra.size() > 1 || (extra.size() == 1 && extra[0] != d))
      throw InvalidArgument("hypercube dimension does not match m = " + std::to_string(m));
    return hypercube_graph(d);
  }
  throw InvalidArgument("unknown base graph kind '" + kind + "'");
}

}  // namespace specpart
