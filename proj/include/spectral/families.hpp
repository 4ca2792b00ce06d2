#ifndef SPECTRAL_FAMILIES_HPP
#define SPECTRAL_FAMILIES_HPP

// Named graphs and designs: Shrikhande, the 4x4 rook's graph, the Fano plane,
// the points/planes graphs of AG(3,q), BIBD incidence graphs, cones over
// design graphs, and a keyed catalog of everything with expected spectra.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/spectra.hpp"
#include "spectral/srg.hpp"

namespace spectral {

/// Balanced incomplete block design on points 0..v-1.
struct Bibd {
  std::size_t v = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t r = 0;      // blocks through each point
  std::size_t k = 0;      // points per block
  std::size_t alpha = 0;  // blocks through each pair of points
  bool symmetric = false;

  /// Validates the design axioms and fills r, k, alpha.
  static Bibd from_blocks(std::size_t v, std::vector<std::vector<std::size_t>> blocks) {
    if (v < 2) throw InvalidArgument("a design needs at least two points");
    if (blocks.empty()) throw InvalidArgument("a design needs at least one block");
    Bibd d;
    d.v = v;
    std::vector<std::size_t> through(v, 0);
    std::vector<std::size_t> pairs(v * v, 0);
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      if (b.empty()) throw InvalidArgument("empty block");
      if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InvalidArgument("block repeats a point");
      if (b.back() >= v) throw InvalidArgument("block point out of range");
      if (b.size() != blocks.front().size()) throw InvalidArgument("blocks have different sizes");
      for (std::size_t i = 0; i < b.size(); ++i) {
        ++through[b[i]];
        for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs[b[i] * v + b[j]];
      }
    }
    d.k = blocks.front().size();
    d.r = through[0];
    if (std::any_of(through.begin(), through.end(), [&](std::size_t x) { return x != d.r; }))
      throw InvalidArgument("points lie in different numbers of blocks");
    d.alpha = pairs[0 * v + 1];
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i + 1; j < v; ++j)
        if (pairs[i * v + j] != d.alpha) throw InvalidArgument("point pairs lie in different numbers of blocks");
    d.symmetric = blocks.size() == v;
    d.blocks = std::move(blocks);
    return d;
  }
};

/// Bipartite point-block graph: points 0..v-1, then blocks v..v+b-1.
inline Graph incidence_graph(const Bibd& d) {
  GraphBuilder b(d.v + d.blocks.size());
  for (std::size_t j = 0; j < d.blocks.size(); ++j)
    for (std::size_t p : d.blocks[j]) b.add_edge(p, d.v + j);
  return b.build("incidence(" + std::to_string(d.v) + "," + std::to_string(d.k) + "," + std::to_string(d.alpha) + ")");
}

/// Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)};
/// vertex (a,b) is 4a+b.
inline Graph shrikhande() {
  GraphBuilder b(16);
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      for (const auto& s : steps) {
        const int a2 = (a + s[0]) % 4, c2 = (c + s[1]) % 4;
        b.add_edge(static_cast<std::size_t>(4 * a + c), static_cast<std::size_t>(4 * a2 + c2));
      }
  return b.build("shrikhande");
}

/// The 4x4 rook's graph L(K_{4,4}).
inline Graph lattice_l2_4() { return line_graph(complete_bipartite(4, 4)).with_label("L2(4)"); }

/// Fano plane incidence matrix, rows are points and columns are blocks.
inline constexpr int kFanoIncidence[7][7] = {
    {1, 0, 0, 0, 1, 0, 1}, {1, 1, 0, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0, 1}, {1, 0, 1, 1, 0, 0, 0},
    {0, 1, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 0, 1, 1},
};

/// The symmetric (7,3,1) design; block j is column j of kFanoIncidence.
inline Bibd fano_plane() {
  std::vector<std::vector<std::size_t>> blocks(7);
  for (std::size_t p = 0; p < 7; ++p)
    for (std::size_t j = 0; j < 7; ++j)
      if (kFanoIncidence[p][j]) blocks[j].push_back(p);
  return Bibd::from_blocks(7, std::move(blocks));
}

/// 22-vertex points/planes graph of AG(3,2), assembled as the block matrix
///
///   [ 0     | 1 ... 1   0 ... 0 ]
///   [       | X         J - X   ]
///   [ ----- + ----------------- ]
///   [ Bt    | J-I  J-I          ]
///   [       | J-I  J-I          ]
///
/// with X the Fano incidence matrix: vertices 0..7 are points, 8..21 planes.
inline Graph ag32_graph() {
  GraphBuilder b(22);
  for (std::size_t j = 0; j < 7; ++j) b.add_edge(0, 8 + j);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) b.add_edge(1 + i, (kFanoIncidence[i][j] ? 8 : 15) + j);
  for (std::size_t x = 0; x < 14; ++x)
    for (std::size_t y = x + 1; y < 14; ++y)
      if (x % 7 != y % 7) b.add_edge(8 + x, 8 + y);
  return b.build("ag32");
}

inline bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Points and planes of AG(3,q), q prime. Points x in Z_q^3 come first
/// (index x0 q^2 + x1 q + x2); then the planes {x : a.x = b} for each
/// direction a (first nonzero coordinate 1) and b in Z_q. A point is adjacent
/// to the planes through it, and two planes are adjacent when they meet,
/// i.e. when their directions differ.
inline Graph ag3q_family(std::size_t q) {
  if (!is_prime(q)) throw InvalidArgument("ag3q_family needs a prime q, got " + std::to_string(q));
  const std::size_t points = q * q * q;
  std::vector<std::array<std::size_t, 3>> directions;
  for (std::size_t a0 = 0; a0 < q; ++a0)
    for (std::size_t a1 = 0; a1 < q; ++a1)
      for (std::size_t a2 = 0; a2 < q; ++a2) {
        const std::size_t first = a0 ? a0 : (a1 ? a1 : a2);
        if (first == 1) directions.push_back({a0, a1, a2});
      }
  const std::size_t planes = directions.size() * q;
  if (points + planes > kMaxOrder) throw CapacityError("AG(3," + std::to_string(q) + ") graph exceeds the supported order");
  GraphBuilder b(points + planes);
  for (std::size_t d = 0; d < directions.size(); ++d) {
    const auto& a = directions[d];
    for (std::size_t x = 0; x < points; ++x) {
      const std::size_t dot = (a[0] * (x / (q * q)) + a[1] * (x / q % q) + a[2] * (x % q)) % q;
      b.add_edge(x, points + d * q + dot);
    }
  }
  for (std::size_t p1 = 0; p1 < planes; ++p1)
    for (std::size_t p2 = p1 + 1; p2 < planes; ++p2)
      if (p1 / q != p2 / q) b.add_edge(points + p1, points + p2);
  return b.build("ag3q(" + std::to_string(q) + ")");
}

/// {q^3+q^2+q, q^(q^3-1), (-q)^(q^3+q^2+q)}
inline ExactSpectrum ag3q_spectrum(std::size_t q) {
  const auto Q = static_cast<std::int64_t>(q);
  return ExactSpectrum({{Q * Q * Q + Q * Q + Q, 1}, {Q, q * q * q - 1}, {-Q, q * q * q + q * q + q}});
}

/// Cone over `base`, which must be an srg(a^3+2a^2, a^2+a, a, a).
inline Graph cone_family(const Graph& base, std::size_t a) {
  if (a == 0) throw InvalidArgument("cone_family needs a positive parameter");
  const SrgParams want{a * a * a + 2 * a * a, a * a + a, a, a};
  const auto got = detect_srg(base);
  if (!got || !(*got == want))
    throw InvalidArgument("cone_family base must be srg" + want.to_string() + ", got " + (got ? "srg" + got->to_string() : "a non-srg graph"));
  return cone(base).with_label("cone(" + base.label() + ")");
}

/// {a^2+2a, a^((a^3+2a^2-a-2)/2), (-a)^((a^3+2a^2+a+2)/2)}
inline ExactSpectrum cone_family_spectrum(std::size_t a) {
  const auto A = static_cast<std::int64_t>(a);
  return ExactSpectrum({{A * A + 2 * A, 1}, {A, (a * a * a + 2 * a * a - a - 2) / 2}, {-A, (a * a * a + 2 * a * a + a + 2) / 2}});
}

/// A 4-regular graph on 12 vertices cospectral with L(Q3) but not a line graph.
inline constexpr const char* kBcs9Graph6 = "KugIgGfOOadB";

inline Graph bcs9() { return parse_graph6(kBcs9Graph6).with_label("BCS9"); }

/// The Hamming graph H(3,3) = K3 x K3 x K3.
inline Graph hamming_3_3() { return cartesian_product(cartesian_product(complete(3), complete(3)), complete(3)).with_label("H(3,3)"); }

struct CatalogEntry {
  std::string key;
  std::string description;
  std::string recipe;  // reconstructs an isomorphic graph through the recipe grammar
  std::function<Graph()> build;
  std::optional<ExactSpectrum> expected;
};

/// Regular graphs with four distinct eigenvalues, paired with their spectra.
inline std::vector<CatalogEntry> table2_catalog() {
  const std::string lq3 = "line(kminus(4))", lcp3 = "line(multipartite(2,2,2))", bcs = std::string("g6:") + kBcs9Graph6;
  const std::string h33 = "cartesian(cartesian(complete(3),complete(3)),complete(3))";
  return {
      {"table2/LQ3", "line graph of the cube", lq3, [] { return line_graph(k_minus(4)).with_label("L(Q3)"); },
       ExactSpectrum({{4, 1}, {2, 3}, {0, 3}, {-2, 5}})},
      {"table2/BCS9", "non-line-graph mate of L(Q3)", bcs, [] { return bcs9(); }, ExactSpectrum({{4, 1}, {2, 3}, {0, 3}, {-2, 5}})},
      {"table2/LCP3", "line graph of the cocktail party graph CP(3)", lcp3,
       [] { return line_graph(complete_multipartite({2, 2, 2})).with_label("L(CP(3))"); }, ExactSpectrum({{6, 1}, {2, 3}, {0, 2}, {-2, 6}})},
      {"table2/K33xK3-complement", "complement of K3,3 x K3", "complement(cartesian(kpq(3,3),complete(3)))",
       [] { return complement(cartesian_product(complete_bipartite(3, 3), complete(3))).with_label("complement(K3,3xK3)"); },
       ExactSpectrum({{12, 1}, {3, 2}, {0, 9}, {-3, 6}})},
      {"table2/LQ3xJ2", "L(Q3) blown up by J2", "tensorJ(" + lq3 + ",2)", [] { return tensor_j(line_graph(k_minus(4)), 2); },
       ExactSpectrum({{8, 1}, {4, 3}, {0, 15}, {-4, 5}})},
      {"table2/BCS9xJ2", "BCS9 blown up by J2", "tensorJ(" + bcs + ",2)", [] { return tensor_j(bcs9(), 2); },
       ExactSpectrum({{8, 1}, {4, 3}, {0, 15}, {-4, 5}})},
      {"table2/LCP3xJ2", "L(CP(3)) blown up by J2", "tensorJ(" + lcp3 + ",2)",
       [] { return tensor_j(line_graph(complete_multipartite({2, 2, 2})), 2); }, ExactSpectrum({{12, 1}, {4, 3}, {0, 14}, {-4, 6}})},
      {"table2/H33", "Hamming graph H(3,3)", h33, [] { return hamming_3_3(); }, ExactSpectrum({{6, 1}, {3, 6}, {0, 12}, {-3, 8}})},
      {"table2/H33-d3-complement", "complement of the distance-3 graph of H(3,3)", "complement(distance(" + h33 + ",3))",
       [] { return complement(distance_graph(hamming_3_3(), 3)).with_label("complement(H(3,3)_3)"); },
       ExactSpectrum({{18, 1}, {3, 6}, {0, 8}, {-3, 12}})},
      {"table2/H33-d2", "distance-2 graph of H(3,3)", "distance(" + h33 + ",2)",
       [] { return distance_graph(hamming_3_3(), 2).with_label("H(3,3)_2"); }, ExactSpectrum({{12, 1}, {3, 8}, {0, 6}, {-3, 12}})},
      {"table2/LK6xJ2", "L(K6) blown up by J2", "tensorJ(line(complete(6)),2)", [] { return tensor_j(line_graph(complete(6)), 2); },
       ExactSpectrum({{16, 1}, {4, 5}, {0, 15}, {-4, 9}})},
  };
}

inline std::string shrikhande_graph6() { return write_graph6(shrikhande()); }

/// Every named construction, addressable by key.
inline std::vector<CatalogEntry> catalog() {
  const std::string shr = "g6:" + shrikhande_graph6();
  std::vector<CatalogEntry> out = {
      {"shrikhande", "Shrikhande graph, srg(16,6,2,2)", shr, [] { return shrikhande(); }, ExactSpectrum({{6, 1}, {2, 6}, {-2, 9}})},
      {"l2_4", "4x4 rook's graph L(K4,4), srg(16,6,2,2)", "line(kpq(4,4))", [] { return lattice_l2_4(); },
       ExactSpectrum({{6, 1}, {2, 6}, {-2, 9}})},
      {"cone-shrikhande", "cone over the Shrikhande graph", "cone(" + shr + ")", [] { return cone_family(shrikhande(), 2); },
       cone_family_spectrum(2)},
      {"cone-l2_4", "cone over L2(4)", "cone(line(kpq(4,4)))", [] { return cone_family(lattice_l2_4(), 2); }, cone_family_spectrum(2)},
      {"ag32", "points and planes of AG(3,2)", "ag3q(2)", [] { return ag32_graph(); }, ag3q_spectrum(2)},
      {"ag33", "points and planes of AG(3,3)", "ag3q(3)", [] { return ag3q_family(3); }, ag3q_spectrum(3)},
      {"heawood", "incidence graph of the Fano plane", "g6:" + write_graph6(incidence_graph(fano_plane())),
       [] { return incidence_graph(fano_plane()).with_label("heawood"); },
       ExactSpectrum({{ExactEigenvalue::integer(3), 1}, {ExactEigenvalue::surd(1, 2), 6}, {ExactEigenvalue::surd(-1, 2), 6},
                      {ExactEigenvalue::integer(-3), 1}})},
      {"Q3", "the cube K-(4,4)", "kminus(4)", [] { return k_minus(4).with_label("Q3"); }, ExactSpectrum({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}})},
      {"CP3", "cocktail party graph K(2,2,2)", "multipartite(2,2,2)", [] { return complete_multipartite({2, 2, 2}).with_label("CP(3)"); },
       ExactSpectrum({{4, 1}, {0, 3}, {-2, 2}})},
      {"LK6", "triangular graph L(K6), srg(15,8,4,4)", "line(complete(6))", [] { return line_graph(complete(6)).with_label("L(K6)"); },
       ExactSpectrum({{8, 1}, {2, 5}, {-2, 9}})},
      {"petersen", "Petersen graph", "complement(line(complete(5)))", [] { return complement(line_graph(complete(5))).with_label("petersen"); },
       ExactSpectrum({{3, 1}, {1, 5}, {-2, 4}})},
      {"Q3-star-J2-complement", "complement of Q3 with clone cliques of size 2", "complement(starJ(kminus(4),2))",
       [] { return complement(star_j(k_minus(4), 2)); }, ExactSpectrum({{8, 1}, {4, 1}, {0, 11}, {-4, 3}})},
      {"cone-shrikhande-xJ2", "cone over Shrikhande blown up by J2", "tensorJ(cone(" + shr + "),2)",
       [] { return tensor_j(cone(shrikhande()), 2); }, ExactSpectrum({{16, 1}, {4, 6}, {0, 17}, {-4, 10}})},
      {"ag32-xJ2", "AG(3,2) graph blown up by J2", "tensorJ(ag3q(2),2)", [] { return tensor_j(ag32_graph(), 2); },
       ExactSpectrum({{28, 1}, {4, 7}, {0, 22}, {-4, 14}})},
  };
  auto t2 = table2_catalog();
  out.insert(out.end(), t2.begin(), t2.end());
  return out;
}

/// Builds the catalog graph with the given key; throws InvalidArgument for unknown keys.
inline Graph catalog_graph(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e.build().with_label(key);
  throw InvalidArgument("unknown catalog key '" + key + "'");
}

}  // namespace spectral

#endif  // SPECTRAL_FAMILIES_HPP
