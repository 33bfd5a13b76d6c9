#pragma once

#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "specpart/family.hpp"
#include "specpart/generators.hpp"
#include "specpart/graph_io.hpp"

namespace specpart {

// Text form of a family specification:
//
//   # four cycles, two cone vertices
//   m 13
//   cone 2
//   base cycle                    # shorthand: all four blocks
//   base3 complete_bipartite 6 7  # override one block (1-based)
//
// Descriptors: path | cycle | complete | complete_bipartite p q |
// hypercube d | file <edge-list path>.

struct GraphDescriptor {
  std::string kind = "cycle";
  std::vector<std::size_t> params;
  std::string path;  // only for kind == "file"

  std::string to_string() const {
    if (kind == "file") return "file " + path;
    std::string s = kind;
    for (std::size_t p : params) s += " " + std::to_string(p);
    return s;
  }

  Graph realize(std::size_t m) const {
    if (kind == "file") {
      Graph g = read_edge_list_file(path);
      if (g.order() != m)
        throw InvalidArgument("graph file '" + path + "' has " + std::to_string(g.order()) +
                              " vertices, expected " + std::to_string(m));
      return g;
    }
    return base_graph(kind, m, params);
  }

  bool operator==(const GraphDescriptor&) const = default;
};

inline GraphDescriptor parse_descriptor(const std::string& text) {
  std::istringstream in(text);
  GraphDescriptor d;
  if (!(in >> d.kind)) throw InvalidArgument("empty graph descriptor");
  if (d.kind == "file") {
    if (!(in >> d.path)) throw InvalidArgument("'file' descriptor needs a path");
    std::string extra;
    if (in >> extra) throw InvalidArgument("trailing text in descriptor '" + text + "'");
  } else {
    long long p = 0;
    while (in >> p) {
      if (p < 0) throw InvalidArgument("negative descriptor parameter");
      d.params.push_back(static_cast<std::size_t>(p));
    }
    if (!in.eof()) throw InvalidArgument("malformed descriptor '" + text + "'");
  }
  return d;
}

struct FamilyConfig {
  std::size_t m = 0;
  std::size_t cone = 0;
  std::array<GraphDescriptor, 4> bases{};

  FamilySpec resolve() const {
    FamilySpec spec{m, {}, cone};
    for (const auto& d : bases) spec.base_graphs.push_back(d.realize(m));
    return spec;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "m " << m << "\ncone " << cone << '\n';
    for (std::size_t j = 0; j < 4; ++j) out << "base" << j + 1 << ' ' << bases[j].to_string() << '\n';
    return out.str();
  }

  bool operator==(const FamilyConfig&) const = default;
};

inline FamilyConfig parse_family_config(std::istream& in) {
  FamilyConfig cfg;
  bool have_m = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto fail = [&](const std::string& what) {
      throw InvalidArgument("family config line " + std::to_string(lineno) + ": " + what);
    };
    auto number = [&]() -> std::size_t {
      std::istringstream rs(rest);
      long long v = -1;
      std::string extra;
      if (!(rs >> v) || v < 0 || (rs >> extra)) fail("expected a non-negative integer after '" + key + "'");
      return static_cast<std::size_t>(v);
    };
    if (key == "m") {
      cfg.m = number();
      have_m = true;
    } else if (key == "cone") {
      cfg.cone = number();
    } else if (key == "base") {
      const auto d = parse_descriptor(rest);
      cfg.bases.fill(d);
    } else if (key.size() == 5 && key.starts_with("base") && key[4] >= '1' && key[4] <= '4') {
      cfg.bases[static_cast<std::size_t>(key[4] - '1')] = parse_descriptor(rest);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_m) throw InvalidArgument("family config is missing 'm'");
  return cfg;
}

inline FamilyConfig parse_family_config(const std::string& text) {
  std::istringstream in(text);
  return parse_family_config(in);
}

}  // namespace specpart
