#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "specpart/graph.hpp"
#include "specpart/matrix.hpp"

namespace specpart {

/// Full eigendecomposition of a symmetric matrix: eigenvalues nondecreasing,
/// eigenvectors[k] the unit eigenvector paired with eigenvalues[k].
struct Spectrum {
  Vector eigenvalues;
  std::vector<Vector> eigenvectors;

  std::size_t size() const { return eigenvalues.size(); }
  bool operator==(const Spectrum&) const = default;
};

/// Orthonormal basis of the eigenspace belonging to one (clustered) eigenvalue.
struct Eigenspace {
  double eigenvalue = 0.0;
  std::vector<Vector> basis;

  std::size_t multiplicity() const { return basis.size(); }
};

struct JacobiOptions {
  double symmetry_tol = 1e-12;
  double off_tol = 1e-14;  // relative to ||A||_F
  int max_sweeps = 100;
};

namespace detail {

// Flip v so that its largest-magnitude entry is positive. Entries within a
// relative 1e-12 of the maximum count as tied; the lowest index wins.
inline void normalize_sign(Vector& v) {
  const double big = norm_inf(v);
  if (big == 0.0) return;
  for (double x : v) {
    if (std::abs(x) >= big * (1.0 - 1e-12)) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

inline double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver with threshold sweeps.
///
/// Rotations are applied in row-major (p, q) order, so the result is a
/// deterministic function of the input bits. The first three sweeps skip
/// entries below a threshold proportional to the mean off-diagonal size;
/// later sweeps zero entries that are negligible next to both diagonal
/// entries instead of rotating them.
inline Spectrum eigendecompose(const Matrix& input, const JacobiOptions& opts = {}) {
  const std::size_t n = input.size();
  if (!is_symmetric(input, opts.symmetry_tol)) throw InvalidArgument("eigendecompose: matrix is not symmetric");

  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
  Matrix v = Matrix::identity(n);

  const double target = opts.off_tol * frobenius_norm(a);
  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    const double off = detail::off_diagonal_norm(a);
    if (off <= target) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    const double thresh = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh || apq == 0.0) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged)
    throw NoConvergence("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) +
                        " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k));
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
    detail::normalize_sign(col);
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

inline Spectrum eigendecompose(const LaplacianMatrix& l, const JacobiOptions& opts = {}) {
  return eigendecompose(l.matrix(), opts);
}

/// Eigenvalues within this distance are treated as one eigenspace.
inline double grouping_tolerance(const Spectrum& s) {
  const double top = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
  return 1e-8 * std::max(1.0, top);
}

inline double algebraic_connectivity(const Spectrum& s) {
  if (s.size() < 2) throw InvalidArgument("algebraic connectivity needs at least two vertices");
  return s.eigenvalues[1];
}

inline double algebraic_connectivity(const LaplacianMatrix& l) {
  return algebraic_connectivity(eigendecompose(l));
}

/// The lambda_2 eigenspace. Throws when lambda_2 is numerically zero, i.e.
/// the underlying graph is disconnected.
inline Eigenspace fiedler_space(const Spectrum& s) {
  const double lambda2 = algebraic_connectivity(s);
  const double tol = grouping_tolerance(s);
  if (lambda2 <= tol) throw InvalidArgument("graph is disconnected (lambda_2 is zero); no Fiedler space");
  Eigenspace es{lambda2, {}};
  for (std::size_t k = 1; k < s.size() && s.eigenvalues[k] - lambda2 <= tol; ++k)
    es.basis.push_back(s.eigenvectors[k]);
  return es;
}

inline Eigenspace fiedler_space(const LaplacianMatrix& l) { return fiedler_space(eigendecompose(l)); }

}  // namespace specpart
