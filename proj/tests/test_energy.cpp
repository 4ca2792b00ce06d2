#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "spectral/classify.hpp"
#include "spectral/energy.hpp"
#include "spectral/families.hpp"
#include "support.hpp"

using namespace spectral;
using spectral::testing::random_graph;

namespace {

// Singular values as square roots of the eigenvalues of A^T A. Gram
// eigenvalues below 1e-9 are rounding noise around zero.
std::vector<double> gram_singular_values(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  const Eigen::MatrixXd gram = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mu = solver.eigenvalues()(i);
    out.push_back(mu < 1e-9 ? 0.0 : std::sqrt(mu));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST(Energy, KnownValues) {
  for (std::size_t n = 2; n <= 9; ++n) EXPECT_EQ(*energy(complete(n)).exact, SurdSum(2 * static_cast<std::int64_t>(n - 1)));
  EXPECT_EQ(*energy(shrikhande()).exact, SurdSum(36));
  EXPECT_EQ(*energy(complete_bipartite(2, 3)).exact, SurdSum(2) * SurdSum::sqrt_of(6));
  const RealValue p4 = energy(path(4));
  EXPECT_FALSE(p4.exact.has_value());
  EXPECT_NEAR(p4.approx, 2 * std::sqrt(5.0), 1e-12);
}

TEST(Energy, LowerBoundEqualityCases) {
  for (std::size_t p = 1; p <= 5; ++p)
    for (std::size_t q = p; q <= 5; ++q) {
      const auto b = nikiforov_bound(complete_bipartite(p, q));
      EXPECT_TRUE(b.equal) << p << "," << q;
      EXPECT_TRUE(b.exact);
      EXPECT_EQ(*b.bound.exact, SurdSum(2) * SurdSum::sqrt_of(static_cast<std::int64_t>(p * q)));
    }
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto b = nikiforov_bound(complete(n));
    EXPECT_TRUE(b.equal);
    EXPECT_EQ(*b.bound.exact, SurdSum(2 * static_cast<std::int64_t>(n - 1)));
  }
  const auto p4 = nikiforov_bound(path(4));
  EXPECT_FALSE(p4.equal);
  EXPECT_FALSE(p4.exact);
  EXPECT_LT(p4.bound.approx, energy(path(4)).approx);
  EXPECT_TRUE(nikiforov_bound(complete(2)).equal);
}

TEST(Energy, UpperBoundEqualityCases) {
  const auto shr = km_bound(shrikhande());
  EXPECT_TRUE(shr.equal);
  EXPECT_EQ(*shr.bound.exact, SurdSum(36));
  for (std::size_t k = 1; k <= 5; ++k) {
    std::vector<Graph> parts(k, complete(2));
    const auto b = km_bound(disjoint_union(parts));
    EXPECT_TRUE(b.equal) << k;
    EXPECT_EQ(*b.bound.exact, SurdSum(2 * static_cast<std::int64_t>(k)));
  }
  const auto p3 = km_bound(path(3));
  EXPECT_FALSE(p3.equal);
  EXPECT_EQ(*p3.bound.exact, SurdSum::sqrt_of(2) + SurdSum(2));
}

TEST(Energy, OrderBound) {
  EXPECT_EQ(*km_n_bound(shrikhande()).exact, SurdSum(40));
  EXPECT_EQ(*km_n_bound(complete(4)).exact, SurdSum(6));
  EXPECT_EQ(*km_n_bound(complete(4)).exact, *energy(complete(4)).exact);
  EXPECT_EQ(*km_n_bound(complete(2)).exact, SurdSum(1) + SurdSum::sqrt_of(2));
}

TEST(Energy, SingularValues) {
  const auto k23 = singular_values(complete_bipartite(2, 3));
  ASSERT_EQ(k23.size(), 5u);
  EXPECT_NEAR(k23[0], std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(k23[1], std::sqrt(6.0), 1e-12);
  for (std::size_t i = 2; i < 5; ++i) EXPECT_NEAR(k23[i], 0.0, 1e-12);
  const auto shr = singular_values(shrikhande());
  EXPECT_NEAR(shr[0], 6.0, 1e-12);
  for (std::size_t i = 1; i < 16; ++i) EXPECT_NEAR(shr[i], 2.0, 1e-12);
  const auto p3 = singular_values(path(3));
  EXPECT_NEAR(p3[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3[1], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(p3[2], 0.0, 1e-12);
}

TEST(Energy, SingularValuesAgreeWithGramRoute) {
  std::mt19937 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(rng, 1 + i % 20, 0.1 + 0.8 * (i % 7) / 6.0);
    const auto a = singular_values(g), b = gram_singular_values(g);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-8) << i;
  }
}

TEST(Energy, ExhaustiveSmallOrdersRespectBoundsAndEqualities) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      GraphBuilder gb(n);
      std::size_t bit = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
          if (mask >> bit & 1) gb.add_edge(u, v);
      const Analysis a = analyze(gb.build());
      // nonzero with zero trace means a positive and a negative eigenvalue
      ASSERT_GE(exact_rank(adjacency_int_matrix(a.graph)), 2u);
      const BoundReport b = bound_report(a.spectrum, a.n, a.m);
      EXPECT_LE(b.nikiforov_bound.approx, b.energy.approx + 1e-8);
      EXPECT_LE(b.energy.approx, b.km_bound.approx + 1e-8);
      EXPECT_LE(b.energy.approx, b.km_n_bound.approx + 1e-8);
      EXPECT_EQ(b.nikiforov_equal, in_G(a).member) << mask;
      EXPECT_EQ(b.km_equal, equal_nonindex_absolute_values(a)) << mask;
      EXPECT_TRUE(check_energy_bounds(a, b).passed());
    }
  }
}
