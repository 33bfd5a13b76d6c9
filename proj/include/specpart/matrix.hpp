#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "specpart/error.hpp"

namespace specpart {

using Vector = std::vector<double>;

/// Dense row-major square matrix. Small by construction (desk-scale graphs),
/// so everything is stored contiguously and copied by value.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  bool operator==(const DenseMatrix&) const = default;

  template <typename U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (double x : a.row(i)) s += x * x;
  return std::sqrt(s);
}

inline bool is_symmetric(const Matrix& a, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

inline Vector multiply(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  Vector y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

inline Vector normalized(Vector v) {
  const double nrm = norm2(v);
  if (nrm == 0.0) throw InvalidArgument("cannot normalize a zero vector");
  for (double& x : v) x /= nrm;
  return v;
}

/// |<a,b>| / (|a| |b|)
inline double abs_cosine(std::span<const double> a, std::span<const double> b) {
  return std::abs(dot(a, b)) / (norm2(a) * norm2(b));
}

/// ||A v - lambda v||_2
inline double residual(const Matrix& a, std::span<const double> v, double lambda) {
  Vector av = multiply(a, v);
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double d = av[i] - lambda * v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

/// Modified Gram-Schmidt in input order. Vectors that become numerically
/// dependent (norm below `drop_tol` relative to their input norm) are dropped.
inline std::vector<Vector> orthonormalize(const std::vector<Vector>& vs, double drop_tol = 1e-12) {
  std::vector<Vector> out;
  for (const Vector& v : vs) {
    Vector w = v;
    const double n0 = norm2(w);
    for (const Vector& q : out) {
      const double c = dot(q, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
    }
    const double n1 = norm2(w);
    if (n0 == 0.0 || n1 <= drop_tol * n0) continue;
    for (double& x : w) x /= n1;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace specpart
