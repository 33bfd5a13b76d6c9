#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "specpart/graph.hpp"
#include "specpart/spectrum.hpp"

namespace specpart {

// The adversarial family: four base graphs G_1..G_4 on m vertices each,
// laid out as consecutive blocks and coupled by
//
//   block 1 -- block 2   identity matching
//   block 2 -- block 3   complete bipartite join
//   block 3 -- block 4   identity matching
//
// The coupling Laplacian (L_* below) has a closed-form spectrum; when every
// base graph is well connected, the Fiedler vector of the whole graph is
// the L_* eigenvector phi_-, whose median cut severs the m^2 join edges
// while the blocks {1,4} | {2,3} split cuts only 2m.

/// Closed-form eigenvalues of L_* that are not 0 or 2.
struct CouplingEigenvalues {
  double lambda_minus;
  double lambda_plus;
  double mu_minus;
  double mu_plus;
};

inline CouplingEigenvalues coupling_eigenvalues(std::size_t m) {
  const double md = static_cast<double>(m);
  const double r = std::sqrt(md * md + 1.0);
  const double h = std::sqrt(md * md / 4.0 + 1.0);
  return {md + 1.0 - r, md + 1.0 + r, md / 2.0 + 1.0 - h, md / 2.0 + 1.0 + h};
}

/// lambda_- - mu_-: the algebraic connectivity every base graph must exceed.
inline double connectivity_budget(std::size_t m) {
  const auto ev = coupling_eigenvalues(m);
  return ev.lambda_minus - ev.mu_minus;
}

inline constexpr double kBudgetMargin = 1e-9;

struct FamilySpec {
  std::size_t m = 0;
  std::vector<Graph> base_graphs;  // exactly four
  std::size_t cone_count = 0;      // 0..3

  std::size_t order() const { return 4 * m + cone_count; }
};

struct FamilyInstance {
  Graph graph;
  LaplacianMatrix laplacian;
};

struct Eigenpair {
  double value;
  Vector vector;  // unit length
};

struct AnalyticSpectrum {
  double lambda_minus;
  double lambda_plus;
  double mu_minus;
  double mu_plus;
  std::vector<Eigenpair> eigenpairs;  // 4m pairs

  Vector sorted_values() const {
    Vector v;
    for (const auto& p : eigenpairs) v.push_back(p.value);
    std::sort(v.begin(), v.end());
    return v;
  }
};

struct SubspaceDecomposition {
  std::vector<Vector> w0_basis;  // span{phi_-, phi_+, phi_2}
  std::vector<Vector> w1_basis;  // span{psi_k^+-}
};

struct Lemma1Bound {
  double w1_min;    // min Rayleigh quotient of L over W_1
  double bound;     // min_j a(G_j) + mu_-
  double w0_min;    // min Rayleigh quotient of L over W_0 (should be lambda_-)
};

namespace detail {
inline void require_block_size(std::size_t m) {
  if (m < 2) throw InvalidArgument("family block size m must be at least 2");
}
}  // namespace detail

inline Vector ones(std::size_t n) { return Vector(n, 1.0); }

/// (a_1 b, ..., a_p b)
inline Vector tensor(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("tensor product of an empty vector");
  Vector out;
  out.reserve(a.size() * b.size());
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  return out;
}

inline LaplacianMatrix build_l_star(std::size_t m) {
  detail::require_block_size(m);
  const std::size_t n = 4 * m;
  Matrix a(n);
  const double big = static_cast<double>(m) + 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = 1.0;
    a(m + i, m + i) = big;
    a(2 * m + i, 2 * m + i) = big;
    a(3 * m + i, 3 * m + i) = 1.0;
    a(i, m + i) = a(m + i, i) = -1.0;
    a(2 * m + i, 3 * m + i) = a(3 * m + i, 2 * m + i) = -1.0;
    for (std::size_t j = 0; j < m; ++j) a(m + i, 2 * m + j) = a(2 * m + j, m + i) = -1.0;
  }
  return LaplacianMatrix(std::move(a));
}

/// Orthonormal basis of 1^perp in R^m: Gram-Schmidt on e_k - e_{k+1}.
inline std::vector<Vector> complement_of_ones_basis(std::size_t m) {
  std::vector<Vector> diffs;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    Vector d(m, 0.0);
    d[k] = 1.0;
    d[k + 1] = -1.0;
    diffs.push_back(std::move(d));
  }
  return orthonormalize(diffs);
}

namespace detail {
inline Vector phi_for(double lambda, std::size_t m) {
  const Vector head{1.0, 1.0 - lambda, lambda - 1.0, -1.0};
  return tensor(head, ones(m));
}

// psi vectors for one mu, in the order: first two blocks for every xi_k,
// then last two blocks for every xi_k.
inline std::vector<Vector> psi_family(double mu, const std::vector<Vector>& xi) {
  std::vector<Vector> out;
  const Vector front{1.0, 1.0 - mu, 0.0, 0.0};
  const Vector back{0.0, 0.0, 1.0 - mu, 1.0};
  for (const Vector& x : xi) out.push_back(tensor(front, x));
  for (const Vector& x : xi) out.push_back(tensor(back, x));
  return out;
}
}  // namespace detail

inline AnalyticSpectrum analytic_spectrum(std::size_t m) {
  detail::require_block_size(m);
  const auto ev = coupling_eigenvalues(m);
  const auto xi = complement_of_ones_basis(m);
  AnalyticSpectrum out{ev.lambda_minus, ev.lambda_plus, ev.mu_minus, ev.mu_plus, {}};
  out.eigenpairs.push_back({0.0, normalized(ones(4 * m))});
  out.eigenpairs.push_back({ev.lambda_minus, normalized(detail::phi_for(ev.lambda_minus, m))});
  out.eigenpairs.push_back({ev.lambda_plus, normalized(detail::phi_for(ev.lambda_plus, m))});
  for (double mu : {ev.mu_minus, ev.mu_plus})
    for (Vector& v : detail::psi_family(mu, xi)) out.eigenpairs.push_back({mu, normalized(std::move(v))});
  out.eigenpairs.push_back({2.0, normalized(tensor(Vector{1.0, -1.0, -1.0, 1.0}, ones(m)))});
  return out;
}

inline SubspaceDecomposition subspace_decomposition(std::size_t m) {
  detail::require_block_size(m);
  const auto ev = coupling_eigenvalues(m);
  const auto xi = complement_of_ones_basis(m);
  SubspaceDecomposition d;
  d.w0_basis = orthonormalize({detail::phi_for(ev.lambda_minus, m), detail::phi_for(ev.lambda_plus, m),
                               tensor(Vector{1.0, -1.0, -1.0, 1.0}, ones(m))});
  std::vector<Vector> w1 = detail::psi_family(ev.mu_minus, xi);
  for (Vector& v : detail::psi_family(ev.mu_plus, xi)) w1.push_back(std::move(v));
  d.w1_basis = orthonormalize(w1);
  return d;
}

/// Adds one vertex adjacent to every existing vertex.
inline Graph cone_augment(const Graph& g) {
  std::vector<Edge> es = g.edges();
  const std::size_t apex = g.order();
  for (Vertex v = 0; v < apex; ++v) es.push_back({v, apex});
  return Graph(apex + 1, std::move(es));
}

/// Throws unless the spec satisfies the family's structural invariants and
/// every base graph clears the connectivity budget by kBudgetMargin.
inline void validate(const FamilySpec& spec) {
  detail::require_block_size(spec.m);
  if (spec.base_graphs.size() != 4) throw InvalidArgument("family needs exactly four base graphs");
  if (spec.cone_count > 3) throw InvalidArgument("cone count must be in {0,1,2,3}");
  const double need = connectivity_budget(spec.m) + kBudgetMargin;
  for (std::size_t j = 0; j < 4; ++j) {
    const Graph& g = spec.base_graphs[j];
    const std::string block = "base graph " + std::to_string(j + 1);
    if (g.order() != spec.m)
      throw InvalidArgument(block + " has " + std::to_string(g.order()) + " vertices, expected " +
                            std::to_string(spec.m));
    if (!is_connected(g)) throw InvalidArgument(block + " is not connected");
    const double a = algebraic_connectivity(laplacian(g));
    if (a < need)
      throw HypothesisViolation(block + " has algebraic connectivity " + std::to_string(a) +
                                ", below the required " + std::to_string(need));
  }
}

/// The uncapped family graph (k = 0 part), built from its coupling edges.
inline Graph family_core_graph(const FamilySpec& spec) {
  const std::size_t m = spec.m;
  Graph g0 = disjoint_union(std::span<const Graph>(spec.base_graphs));
  std::vector<Edge> es = g0.edges();
  for (std::size_t i = 0; i < m; ++i) {
    es.push_back({i, m + i});
    es.push_back({2 * m + i, 3 * m + i});
    for (std::size_t j = 0; j < m; ++j) es.push_back({m + i, 2 * m + j});
  }
  return Graph(4 * m, std::move(es));
}

inline FamilyInstance build_family(const FamilySpec& spec) {
  validate(spec);
  Graph g = family_core_graph(spec);
  const LaplacianMatrix l0 = laplacian(disjoint_union(std::span<const Graph>(spec.base_graphs)));
  if (!(laplacian(g) == laplacian_add(l0, build_l_star(spec.m))))
    throw std::logic_error("family graph Laplacian differs from L_0 + L_*");
  for (std::size_t k = 0; k < spec.cone_count; ++k) g = cone_augment(g);
  LaplacianMatrix l = laplacian(g);
  return {std::move(g), std::move(l)};
}

namespace detail {
// Smallest eigenvalue of Q^T A Q for an orthonormal column set Q.
inline double min_rayleigh_on(const Matrix& a, const std::vector<Vector>& basis) {
  const std::size_t d = basis.size();
  std::vector<Vector> aq;
  aq.reserve(d);
  for (const Vector& q : basis) aq.push_back(multiply(a, q));
  Matrix proj(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) proj(i, j) = proj(j, i) = dot(basis[i], aq[j]);
  return eigendecompose(proj).eigenvalues.front();
}
}  // namespace detail

inline Lemma1Bound lemma1_rayleigh_bound(const FamilySpec& spec) {
  if (spec.cone_count != 0) throw InvalidArgument("Rayleigh bound is defined for cone count 0");
  const FamilyInstance inst = build_family(spec);
  const auto sub = subspace_decomposition(spec.m);
  double min_a = std::numeric_limits<double>::infinity();
  for (const Graph& g : spec.base_graphs) min_a = std::min(min_a, algebraic_connectivity(laplacian(g)));
  const auto ev = coupling_eigenvalues(spec.m);
  return {detail::min_rayleigh_on(inst.laplacian.matrix(), sub.w1_basis), min_a + ev.mu_minus,
          detail::min_rayleigh_on(inst.laplacian.matrix(), sub.w0_basis)};
}

/// The cut vector (1,-1,-1,1) (x) 1_m, padded with zeros at cone vertices.
inline Vector witness_vector(std::size_t m, std::size_t cone_count) {
  Vector v = tensor(Vector{1.0, -1.0, -1.0, 1.0}, ones(m));
  v.resize(4 * m + cone_count, 0.0);
  return v;
}

}  // namespace specpart
