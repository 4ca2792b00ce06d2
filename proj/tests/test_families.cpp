#include <gtest/gtest.h>

#include <map>

#include "spectral/families.hpp"
#include "spectral/isomorphism.hpp"
#include "support.hpp"

using namespace spectral;
using spectral::testing::triangle_count;

namespace {

ExactSpectrum certified(const Graph& g) {
  const auto r = exact_spectrum(g);
  EXPECT_TRUE(r.certified()) << g.label();
  return r.exact.value_or(ExactSpectrum{});
}

std::map<std::size_t, std::size_t> degree_multiset(const Graph& g) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t u = 0; u < g.order(); ++u) ++out[g.degree(u)];
  return out;
}

}  // namespace

TEST(Families, ShrikhandeAndRookGraphShareTheirSpectrum) {
  const ExactSpectrum want({{6, 1}, {2, 6}, {-2, 9}});
  EXPECT_EQ(certified(shrikhande()), want);
  EXPECT_EQ(certified(lattice_l2_4()), want);
  EXPECT_EQ(detect_srg(shrikhande()), (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(detect_srg(lattice_l2_4()), (SrgParams{16, 6, 2, 2}));
}

TEST(Families, ShrikhandeIsNotTheRookGraph) {
  EXPECT_FALSE(are_isomorphic(shrikhande(), lattice_l2_4()));
  // each vertex of L2(4) sits in two K4s, Shrikhande has no K4 at all
  EXPECT_EQ(triangle_count(lattice_l2_4()), 32u);
  EXPECT_EQ(triangle_count(shrikhande()), 32u);
  auto count_k4 = [](const Graph& g) {
    std::size_t c = 0;
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (g.adjacent(a, b))
          for (std::size_t x = b + 1; x < n; ++x)
            if (g.adjacent(a, x) && g.adjacent(b, x))
              for (std::size_t y = x + 1; y < n; ++y)
                if (g.adjacent(a, y) && g.adjacent(b, y) && g.adjacent(x, y)) ++c;
    return c;
  };
  EXPECT_EQ(count_k4(lattice_l2_4()), 8u);
  EXPECT_EQ(count_k4(shrikhande()), 0u);
}

TEST(Families, ConesOverDesignGraphs) {
  const ExactSpectrum want({{8, 1}, {2, 6}, {-2, 10}});
  EXPECT_EQ(cone_family_spectrum(2), want);
  EXPECT_EQ(certified(cone_family(shrikhande(), 2)), want);
  EXPECT_EQ(certified(cone_family(lattice_l2_4(), 2)), want);
  EXPECT_THROW(cone_family(shrikhande(), 0), InvalidArgument);
  EXPECT_THROW(cone_family(shrikhande(), 1), InvalidArgument);
  EXPECT_THROW(cone_family(cycle(16), 2), InvalidArgument);
}

TEST(Families, Ag32PointsAndPlanes) {
  const Graph g = ag32_graph();
  EXPECT_EQ(g.order(), 22u);
  EXPECT_EQ(certified(g), ExactSpectrum({{14, 1}, {2, 7}, {-2, 14}}));
  EXPECT_EQ(degree_multiset(g), (std::map<std::size_t, std::size_t>{{7, 8}, {16, 14}}));
  EXPECT_TRUE(are_isomorphic(g, ag3q_family(2)));
}

TEST(Families, Ag3qGeneralPrime) {
  const Graph g = ag3q_family(3);
  EXPECT_EQ(g.order(), 27u + 39u);
  EXPECT_EQ(certified(g), ag3q_spectrum(3));
  EXPECT_EQ(ag3q_spectrum(3), ExactSpectrum({{39, 1}, {3, 26}, {-3, 39}}));
  EXPECT_THROW(ag3q_family(4), InvalidArgument);
  EXPECT_THROW(ag3q_family(1), InvalidArgument);
}

TEST(Families, KMinusSpectra) {
  for (std::int64_t l = 3; l <= 6; ++l) {
    const auto L = static_cast<std::size_t>(l);
    EXPECT_EQ(certified(k_minus(L)), ExactSpectrum({{l - 1, 1}, {1, L - 1}, {-1, L - 1}, {1 - l, 1}})) << l;
  }
}

TEST(Families, FanoPlaneAndHeawoodGraph) {
  const Bibd fano = fano_plane();
  EXPECT_EQ(fano.v, 7u);
  EXPECT_EQ(fano.k, 3u);
  EXPECT_EQ(fano.r, 3u);
  EXPECT_EQ(fano.alpha, 1u);
  EXPECT_TRUE(fano.symmetric);
  const Graph h = incidence_graph(fano);
  EXPECT_EQ(h.order(), 14u);
  EXPECT_TRUE(is_bipartite(h));
  EXPECT_TRUE(is_regular(h));
  // girth 6: no 4-cycles means no two points share two blocks
  for (std::size_t u = 0; u < 14; ++u)
    for (std::size_t v = u + 1; v < 14; ++v) EXPECT_LE(h.common_neighbors(u, v), 1u);
}

TEST(Families, BibdRejectsNonDesigns) {
  EXPECT_THROW(Bibd::from_blocks(1, {{0}}), InvalidArgument);
  EXPECT_THROW(Bibd::from_blocks(3, {}), InvalidArgument);
  EXPECT_THROW(Bibd::from_blocks(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Bibd::from_blocks(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Bibd::from_blocks(3, {{0, 1}, {1}}), InvalidArgument);
  EXPECT_THROW(Bibd::from_blocks(4, {{0, 1}, {2, 3}}), InvalidArgument);  // pairs uneven
  const Bibd k3 = Bibd::from_blocks(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.alpha, 1u);
  EXPECT_TRUE(k3.symmetric);
}

TEST(Families, Bcs9IsCospectralWithTheCubeLineGraph) {
  const Graph b = bcs9();
  const Graph l = line_graph(k_minus(4));
  EXPECT_EQ(certified(b), certified(l));
  EXPECT_FALSE(are_isomorphic(b, l));
  EXPECT_TRUE(is_regular(b));
}

TEST(Families, EveryCatalogEntryCertifiesToItsExpectedSpectrum) {
  const auto entries = catalog();
  EXPECT_GE(entries.size(), 25u);
  for (const auto& e : entries) {
    const Graph g = e.build();
    ASSERT_TRUE(e.expected.has_value()) << e.key;
    EXPECT_EQ(certified(g), *e.expected) << e.key;
    EXPECT_EQ(e.expected->order(), g.order()) << e.key;
  }
}

TEST(Families, CatalogLookup) {
  EXPECT_EQ(catalog_graph("ag32").label(), "ag32");
  EXPECT_EQ(catalog_graph("petersen").size(), 15u);
  EXPECT_THROW(catalog_graph("no-such-graph"), InvalidArgument);
}
