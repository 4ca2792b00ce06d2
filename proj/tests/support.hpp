#ifndef SPECTRAL_TESTS_SUPPORT_HPP
#define SPECTRAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "spectral/graph.hpp"

namespace spectral::testing {

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph shuffled(std::mt19937& rng, const Graph& g) { return permute(g, random_permutation(rng, g.order())); }

/// Circulant graph on n vertices with connection set {+-s : s in jumps}.
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (auto s : jumps)
      if (s % n != 0) b.add_edge(u, (u + s) % n);
  return b.build();
}

inline std::size_t triangle_count(const Graph& g) {
  std::size_t t = 0;
  for (const auto& e : g.edges()) t += g.common_neighbors(e.u, e.v);
  return t / 3;
}

}  // namespace spectral::testing

#endif  // SPECTRAL_TESTS_SUPPORT_HPP
