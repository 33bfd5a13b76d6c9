#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specpart/error.hpp"
#include "specpart/matrix.hpp"

namespace specpart {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored canonically
/// as (min, max) in sorted order; the graph is immutable once built.
/// Connectivity is a query, not an invariant.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    if (n == 0) throw InvalidArgument("graph must have at least one vertex");
    for (Edge& e : edges) {
      if (e.u >= n || e.v >= n)
        throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
      if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw InvalidArgument("duplicate edge (" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + ")");
    edges_ = std::move(edges);
    adj_.resize(n);
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  /// Edgeless graph.
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Subset of [0, n), kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet(std::size_t n, std::vector<Vertex> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= n)
      throw InvalidArgument("vertex " + std::to_string(members_.back()) + " outside [0," +
                            std::to_string(n) + ")");
  }

  static VertexSet all(std::size_t n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    return {n, std::move(m)};
  }

  static VertexSet from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Vertex> m;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) m.push_back(i);
    return {n, std::move(m)};
  }

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  std::vector<bool> indicator() const {
    std::vector<bool> in(n_, false);
    for (Vertex v : members_) in[v] = true;
    return in;
  }

  VertexSet complement() const {
    auto in = indicator();
    std::vector<Vertex> c;
    for (std::size_t i = 0; i < n_; ++i)
      if (!in[i]) c.push_back(i);
    return {n_, std::move(c)};
  }

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t n_;
  std::vector<Vertex> members_;
};

/// A +/-1 vector identifying a cut: +1 on W, -1 on its complement.
class CutVector {
 public:
  explicit CutVector(std::vector<int> values) : values_(std::move(values)) {
    for (int x : values_)
      if (x != 1 && x != -1) throw InvalidArgument("cut vector entries must be +1 or -1");
  }

  static CutVector from_set(const VertexSet& w) {
    std::vector<int> v(w.ambient(), -1);
    for (Vertex i : w.members()) v[i] = 1;
    return CutVector(std::move(v));
  }

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  VertexSet plus_set() const {
    std::vector<Vertex> m;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] == 1) m.push_back(i);
    return {values_.size(), std::move(m)};
  }

  Vector as_real() const { return {values_.begin(), values_.end()}; }

  bool operator==(const CutVector&) const = default;

 private:
  std::vector<int> values_;
};

/// Symmetric matrix with zero row sums. Plain graph Laplacians and the
/// integer coupling matrices of the adversarial family both qualify.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(Matrix m) : m_(std::move(m)) {
    if (!is_symmetric(m_, 0.0)) throw InvalidArgument("Laplacian must be symmetric");
    for (std::size_t i = 0; i < m_.size(); ++i) {
      double s = 0.0;
      for (double x : m_.row(i)) s += x;
      if (s != 0.0) throw InvalidArgument("Laplacian row " + std::to_string(i) + " does not sum to 0");
    }
  }

  std::size_t size() const { return m_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  bool operator==(const LaplacianMatrix&) const = default;

 private:
  Matrix m_;
};

/// Exact non-negative fraction, always in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InvalidArgument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

inline LaplacianMatrix laplacian(const Graph& g) {
  Matrix m(g.order());
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = -1.0;
    m(e.v, e.u) = -1.0;
    m(e.u, e.u) += 1.0;
    m(e.v, e.v) += 1.0;
  }
  return LaplacianMatrix(std::move(m));
}

/// u^T L v.
inline double quadratic_form(const LaplacianMatrix& l, std::span<const double> u,
                             std::span<const double> v) {
  if (u.size() != l.size() || v.size() != l.size())
    throw InvalidArgument("quadratic form dimension mismatch");
  return dot(u, multiply(l.matrix(), v));
}

namespace detail {
inline void require_proper(const Graph& g, const VertexSet& w) {
  if (w.ambient() != g.order()) throw InvalidArgument("vertex set ambient size differs from graph order");
  if (w.empty() || w.size() == g.order())
    throw InvalidArgument("cut side must be a nonempty proper subset of V");
}
}  // namespace detail

/// Number of edges with exactly one endpoint in w.
inline std::size_t cut_cost(const Graph& g, const VertexSet& w) {
  detail::require_proper(g, w);
  const auto in = w.indicator();
  std::size_t c = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) ++c;
  return c;
}

inline Rational cut_ratio(const Graph& g, const VertexSet& w) {
  const auto c = static_cast<std::int64_t>(cut_cost(g, w));
  const auto small = static_cast<std::int64_t>(std::min(w.size(), g.order() - w.size()));
  return Rational::make(c, small);
}

inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), unseen);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != unseen) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (label[y] == unseen) {
          label[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  const auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; });
}

/// Subgraph induced by w, relabeled 0..|w|-1 in increasing original order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw InvalidArgument("induced subgraph needs a nonempty vertex set");
  if (w.ambient() != g.order()) throw InvalidArgument("vertex set ambient size differs from graph order");
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(g.order(), absent);
  for (std::size_t k = 0; k < w.size(); ++k) relabel[w.members()[k]] = k;
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (relabel[e.u] != absent && relabel[e.v] != absent) es.push_back({relabel[e.u], relabel[e.v]});
  return Graph(w.size(), std::move(es));
}

inline Graph disjoint_union(std::span<const Graph> gs) {
  if (gs.empty()) throw InvalidArgument("disjoint union of an empty list");
  std::size_t offset = 0;
  std::vector<Edge> es;
  for (const Graph& g : gs) {
    for (const Edge& e : g.edges()) es.push_back({e.u + offset, e.v + offset});
    offset += g.order();
  }
  return Graph(offset, std::move(es));
}

inline LaplacianMatrix laplacian_add(const LaplacianMatrix& a, const LaplacianMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("Laplacian sum dimension mismatch");
  Matrix s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s(i, j) = a(i, j) + b(i, j);
  return LaplacianMatrix(std::move(s));
}

}  // namespace specpart
