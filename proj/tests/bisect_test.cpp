#include <gtest/gtest.h>

#include <cmath>

#include "specpart/bisect.hpp"
#include "specpart/family.hpp"
#include "specpart/generators.hpp"
#include "test_support.hpp"

namespace specpart {
namespace {

FamilySpec cycle_family(std::size_t m, std::size_t k = 0) {
  return {m, {cycle_graph(m), cycle_graph(m), cycle_graph(m), cycle_graph(m)}, k};
}

VertexSet blocks(std::size_t m, std::size_t n, std::initializer_list<std::size_t> ids) {
  std::vector<Vertex> v;
  for (std::size_t b : ids)
    for (std::size_t i = 0; i < m; ++i) v.push_back((b - 1) * m + i);
  return {n, v};
}

TEST(Median, Examples) {
  EXPECT_EQ(median(Vector{3, 1, 2}), 2.0);
  EXPECT_EQ(median(Vector{1, 2, 3, 4}), 2.5);
  EXPECT_EQ(median(Vector{5, 5, 5}), 5.0);
  EXPECT_THROW(median(Vector{}), InvalidArgument);
}

TEST(Median, PermutationInvariantAndSplitsEvenly) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 25;
    Vector v = testing::random_vector(rng, n);
    // Force some ties.
    if (n > 3 && t % 3 == 0) v[1] = v[2] = v[0];
    const double m = median(v);
    Vector w = v;
    std::shuffle(w.begin(), w.end(), rng);
    EXPECT_EQ(median(w), m);
    const auto above = std::count_if(v.begin(), v.end(), [&](double x) { return x > m; });
    const auto below = std::count_if(v.begin(), v.end(), [&](double x) { return x < m; });
    EXPECT_LE(static_cast<std::size_t>(above), n / 2);
    EXPECT_LE(static_cast<std::size_t>(below), n / 2);
  }
}

TEST(MedianCut, Examples) {
  EXPECT_EQ(median_cut(Vector{1, 2, 3, 4}), CutVector({-1, -1, 1, 1}));
  EXPECT_EQ(median_cut(Vector{0, 0, 0, 0}), CutVector({-1, -1, -1, -1}));
  EXPECT_EQ(median_cut(Vector{-1, -1, 1, 1}), CutVector({-1, -1, 1, 1}));
  EXPECT_THROW(median_cut(Vector{}), InvalidArgument);
}

TEST(SignPartition, Examples) {
  const auto p = sign_partition(Vector{2, 0, -1});
  EXPECT_EQ(p.plus, VertexSet(3, {0}));
  EXPECT_EQ(p.zero, VertexSet(3, {1}));
  EXPECT_EQ(p.minus, VertexSet(3, {2}));

  const auto q = sign_partition(Vector{0.1, 3, 7});
  EXPECT_EQ(q.plus.size(), 3u);
  EXPECT_TRUE(q.zero.empty());
  EXPECT_TRUE(q.minus.empty());
}

TEST(SignPartition, ToleranceScalesWithInfinityNorm) {
  const auto p = sign_partition(Vector{1e-10, -1e-10, 1.0});
  EXPECT_EQ(p.zero, VertexSet(3, {0, 1}));
  const auto q = sign_partition(Vector{1e-7, -1e-7, 1000.0});
  EXPECT_EQ(q.zero, VertexSet(3, {0, 1}));
  const auto r = sign_partition(Vector{1e-7, -1.0});
  EXPECT_EQ(r.plus, VertexSet(2, {0}));
}

TEST(SignPartition, FamilyFiedlerShape) {
  const std::size_t m = 4;
  const double a = 0.3;
  const Vector y = tensor(Vector{1, 1 - a, a - 1, -1}, ones(m));
  const auto p = sign_partition(y);
  EXPECT_EQ(p.plus, blocks(m, 4 * m, {1, 2}));
  EXPECT_EQ(p.minus, blocks(m, 4 * m, {3, 4}));
  EXPECT_TRUE(p.zero.empty());
}

TEST(AssignZeroVertices, SmallerSideFirstTiesToS) {
  // n = 5: plus {0}, zero {1,2,3}, minus {4}; S fills to 2.
  const auto p = sign_partition(Vector{1, 0, 0, 0, -1});
  EXPECT_EQ(assign_zero_vertices(p), VertexSet(5, {0, 1}));
  // n = 6, all zero: alternate S, S^c starting with S.
  const auto z = sign_partition(Vector(6, 0.0));
  EXPECT_EQ(assign_zero_vertices(z), VertexSet(6, {0, 2, 4}));
  // S^c already full: remaining zeros go to S.
  const auto f = sign_partition(Vector{0, 0, -1, -1});
  EXPECT_EQ(assign_zero_vertices(f), VertexSet(4, {0, 1}));
}

TEST(AssignZeroVertices, CannotBalance) {
  SignPartition p{VertexSet(4, {0, 1, 2}), VertexSet(4, {3}), VertexSet(4, {}), Vector{1, 1, 1, -1}};
  EXPECT_THROW(assign_zero_vertices(p), CannotBalance);
  SignPartition q{VertexSet(5, {}), VertexSet(5, {0, 1, 2, 3}), VertexSet(5, {4}), Vector{-1, -1, -1, -1, 0}};
  EXPECT_THROW(assign_zero_vertices(q), CannotBalance);
}

TEST(SpectralBisection, PathOnTwoVertices) {
  const Graph p2(2, {{0, 1}});
  const auto b = spectral_bisection(p2, Vector{1 / std::sqrt(2.0), -1 / std::sqrt(2.0)});
  EXPECT_EQ(b.side_s, VertexSet(2, {0}));
  EXPECT_EQ(b.side_sc, VertexSet(2, {1}));
  EXPECT_EQ(b.cut, 1u);
}

TEST(SpectralBisection, FamilyFiedlerAndWitnessVectors) {
  for (std::size_t m : {3, 4, 7}) {
    const auto inst = build_family(cycle_family(m));
    const double lm = coupling_eigenvalues(m).lambda_minus;
    const auto by = spectral_bisection(inst.graph, tensor(Vector{1, 1 - lm, lm - 1, -1}, ones(m)));
    EXPECT_EQ(by.side_s, blocks(m, 4 * m, {1, 2}));
    EXPECT_EQ(by.cut, m * m);
    const auto bv = spectral_bisection(inst.graph, tensor(Vector{1, -1, -1, 1}, ones(m)));
    EXPECT_EQ(bv.side_s, blocks(m, 4 * m, {1, 4}));
    EXPECT_EQ(bv.cut, 2 * m);
  }
}

TEST(SpectralBisection, Preconditions) {
  EXPECT_THROW(spectral_bisection(Graph(3, {{0, 1}}), Vector{1, 0, -1}), InvalidArgument);
  EXPECT_THROW(spectral_bisection(path_graph(3), Vector{1, -1}), InvalidArgument);
}

TEST(SpectralBisection, AlwaysBalancedOnRandomInputs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 15;
    const Graph g = testing::random_connected_graph(rng, n, 0.3);
    Vector v = testing::random_vector(rng, n);
    // Quantize to create ties and zeros.
    if (t % 2 == 0)
      for (double& x : v) x = std::round(2 * x);
    try {
      const auto b = spectral_bisection(g, v);
      EXPECT_EQ(b.side_s.size(), n / 2);
      EXPECT_EQ(b.side_s.size() + b.side_sc.size(), n);
      EXPECT_EQ(b.cut, testing::pairwise_cut(g, b.side_s.indicator()));
    } catch (const CannotBalance&) {
      ADD_FAILURE() << "median shift always admits a bisection";
    }
  }
}

TEST(SpectralBisection, ScaleAndNegationInvariance) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 14;
    const Graph g = testing::random_connected_graph(rng, n, 0.3);
    const Vector v = testing::random_vector(rng, n);  // distinct entries a.s.
    const auto b = spectral_bisection(g, v);
    Vector scaled = v, neg = v;
    for (double& x : scaled) x *= 3.7;
    for (double& x : neg) x = -x;
    EXPECT_EQ(spectral_bisection(g, scaled).cut, b.cut);
    if (n % 2 == 0) {
      const auto bn = spectral_bisection(g, neg);
      EXPECT_EQ(bn.side_s, b.side_sc);
      EXPECT_EQ(bn.cut, b.cut);
    }
  }
}

TEST(FiedlerConnectivity, Examples) {
  EXPECT_TRUE(fiedler_connectivity_check(path_graph(3), Vector{1 / std::sqrt(2.0), 0, -1 / std::sqrt(2.0)}));

  const std::size_t m = 4;
  const auto inst = build_family(cycle_family(m));
  const double lm = coupling_eigenvalues(m).lambda_minus;
  EXPECT_TRUE(fiedler_connectivity_check(inst.graph, tensor(Vector{1, 1 - lm, lm - 1, -1}, ones(m))));

  const Graph k4 = complete_graph(4);
  const auto fs = fiedler_space(laplacian(k4));
  ASSERT_EQ(fs.multiplicity(), 3u);
  for (const Vector& y : fs.basis) EXPECT_TRUE(fiedler_connectivity_check(k4, y));
  Vector mix(4, 0.0);
  for (std::size_t i = 0; i < 4; ++i) mix[i] = 0.2 * fs.basis[0][i] - 1.3 * fs.basis[1][i] + fs.basis[2][i];
  EXPECT_TRUE(fiedler_connectivity_check(k4, mix));
}

TEST(FiedlerConnectivity, RejectsNonEigenvectors) {
  EXPECT_THROW(fiedler_connectivity_check(path_graph(3), Vector{1, -1, 0}), InvalidArgument);
  // lambda_3 eigenvector of P_3
  EXPECT_THROW(fiedler_connectivity_check(path_graph(3), Vector{1, -2, 1}), InvalidArgument);
}

TEST(FiedlerConnectivity, HoldsOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing::random_connected_graph(rng, 2 + rng() % 11, 0.2 + 0.05 * (t % 6));
    const auto fs = fiedler_space(laplacian(g));
    for (const Vector& y : fs.basis) EXPECT_TRUE(fiedler_connectivity_check(g, y, fs.eigenvalue));
  }
}

}  // namespace
}  // namespace specpart
