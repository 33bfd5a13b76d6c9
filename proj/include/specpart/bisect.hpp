#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "specpart/graph.hpp"
#include "specpart/spectrum.hpp"

namespace specpart {

/// i_+, i_- and i_0 of a real vector. An entry counts as zero when its
/// magnitude is at most 1e-9 * max(1, ||source||_inf).
struct SignPartition {
  VertexSet plus;
  VertexSet minus;
  VertexSet zero;
  Vector source;
};

struct Bisection {
  VertexSet side_s;
  VertexSet side_sc;
  std::size_t cut = 0;
};

inline double zero_tolerance(std::span<const double> v) { return 1e-9 * std::max(1.0, norm_inf(v)); }

/// Median of the nondecreasing rearrangement: the middle entry for odd
/// length, the mean of the two middle entries for even length.
inline double median(std::span<const double> v) {
  if (v.empty()) throw InvalidArgument("median of an empty vector");
  Vector w(v.begin(), v.end());
  std::sort(w.begin(), w.end());
  const std::size_t n = w.size();
  if (n % 2 == 1) return w[n / 2];
  return 0.5 * (w[n / 2 - 1] + w[n / 2]);
}

/// +1 strictly above the median, -1 elsewhere. No balancing.
inline CutVector median_cut(std::span<const double> v) {
  const double m = median(v);
  std::vector<int> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i] > m ? 1 : -1;
  return CutVector(std::move(c));
}

inline SignPartition sign_partition(std::span<const double> v) {
  if (v.empty()) throw InvalidArgument("sign partition of an empty vector");
  const double tol = zero_tolerance(v);
  std::vector<Vertex> plus, minus, zero;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) <= tol)
      zero.push_back(i);
    else if (v[i] > 0.0)
      plus.push_back(i);
    else
      minus.push_back(i);
  }
  const std::size_t n = v.size();
  return {VertexSet(n, std::move(plus)), VertexSet(n, std::move(minus)), VertexSet(n, std::move(zero)),
          Vector(v.begin(), v.end())};
}

inline Vector median_shifted(std::span<const double> v) {
  const double m = median(v);
  Vector out(v.begin(), v.end());
  for (double& x : out) x -= m;
  return out;
}

namespace detail {
inline void require_balanceable(const SignPartition& p) {
  const std::size_t n = p.source.size();
  if (p.plus.size() > n / 2 || p.minus.size() > n - n / 2)
    throw CannotBalance("sign pattern has |i+|=" + std::to_string(p.plus.size()) +
                        ", |i-|=" + std::to_string(p.minus.size()) + " on " + std::to_string(n) +
                        " vertices; no bisection extends it");
}
}  // namespace detail

/// S = i_+ plus zero vertices handed out in ascending index order, each to
/// the currently smaller side (ties to S) unless that side is already full.
/// |S| ends at floor(n/2).
inline VertexSet assign_zero_vertices(const SignPartition& p) {
  detail::require_balanceable(p);
  const std::size_t n = p.source.size();
  const std::size_t target_s = n / 2;
  const std::size_t target_sc = n - target_s;
  std::vector<Vertex> s = p.plus.members();
  std::size_t sc = p.minus.size();
  for (Vertex z : p.zero.members()) {
    const bool to_s = s.size() == target_s ? false : sc == target_sc ? true : s.size() <= sc;
    if (to_s)
      s.push_back(z);
    else
      ++sc;
  }
  return {n, std::move(s)};
}

inline Bisection make_bisection(const Graph& g, VertexSet s) {
  if (s.size() != g.order() / 2) throw CannotBalance("side S does not have floor(n/2) vertices");
  VertexSet sc = s.complement();
  const std::size_t c = cut_cost(g, s);
  return {std::move(s), std::move(sc), c};
}

/// Spectral bisection from a Fiedler vector: median-shift, split by sign,
/// distribute the zero set deterministically (see assign_zero_vertices).
inline Bisection spectral_bisection(const Graph& g, std::span<const double> fiedler) {
  if (fiedler.size() != g.order()) throw InvalidArgument("Fiedler vector length differs from graph order");
  if (g.order() < 2) throw InvalidArgument("bisection needs at least two vertices");
  if (!is_connected(g)) throw InvalidArgument("spectral bisection requires a connected graph");
  const SignPartition p = sign_partition(median_shifted(fiedler));
  return make_bisection(g, assign_zero_vertices(p));
}

/// Both i_+ u i_0 and i_- u i_0 of an eigenvector for lambda_2 must induce
/// connected subgraphs. Throws if `fiedler` is not such an eigenvector.
inline bool fiedler_connectivity_check(const Graph& g, std::span<const double> fiedler, double lambda2) {
  if (fiedler.size() != g.order()) throw InvalidArgument("Fiedler vector length differs from graph order");
  const LaplacianMatrix l = laplacian(g);
  const double scale = std::max(1.0, frobenius_norm(l.matrix())) * norm2(fiedler);
  if (scale == 0.0 || residual(l.matrix(), fiedler, lambda2) > 1e-8 * scale)
    throw InvalidArgument("vector is not an eigenvector for lambda_2");

  const SignPartition p = sign_partition(fiedler);
  auto side_connected = [&](const VertexSet& side) {
    std::vector<Vertex> m = side.members();
    m.insert(m.end(), p.zero.members().begin(), p.zero.members().end());
    if (m.empty()) return false;
    return is_connected(induced_subgraph(g, VertexSet(g.order(), std::move(m))));
  };
  return side_connected(p.plus) && side_connected(p.minus);
}

inline bool fiedler_connectivity_check(const Graph& g, std::span<const double> fiedler) {
  if (!is_connected(g)) throw InvalidArgument("Fiedler connectivity check requires a connected graph");
  return fiedler_connectivity_check(g, fiedler, algebraic_connectivity(laplacian(g)));
}

}  // namespace specpart
