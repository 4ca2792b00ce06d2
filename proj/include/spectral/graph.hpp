#ifndef SPECTRAL_GRAPH_HPP
#define SPECTRAL_GRAPH_HPP

// Simple undirected graphs stored as bit-set adjacency rows, together with
// the elementary constructors and graph operations the named families are
// composed from.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectral/errors.hpp"

namespace spectral {

inline constexpr std::size_t kMaxOrder = 4096;

struct Edge {
  std::size_t u;
  std::size_t v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Immutable simple graph. Row `u` is a bit set of the neighbours of `u`.
class Graph {
 public:
  /// The null graph (order 0). Only useful as a placeholder value.
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string label = {});
  static Graph from_adjacency(const std::vector<std::vector<int>>& matrix, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::span<const std::uint64_t> row(std::size_t u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  /// Number of common neighbours of u and v.
  std::size_t common_neighbors(std::size_t u, std::size_t v) const {
    std::size_t c = 0;
    auto a = row(u);
    auto b = row(v);
    for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }

  std::vector<std::size_t> neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    out.reserve(degree(u));
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = bits_[u * words_ + w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Edges (u < v) in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  const std::string& label() const noexcept { return label_; }

  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  /// Dense 0/1 adjacency matrix, row-major.
  std::vector<int> adjacency_matrix() const {
    std::vector<int> a(n_ * n_, 0);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : neighbors(u)) a[u * n_ + v] = 1;
    return a;
  }

  /// Structural equality of labeled graphs; the provenance label is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::string label_;
};

/// Mutable staging area for a Graph. `build()` validates symmetry and the zero diagonal.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
    if (n == 0) throw InvalidArgument("graph order must be positive");
    if (n > kMaxOrder)
      throw CapacityError("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxOrder));
  }

  std::size_t order() const noexcept { return n_; }

  GraphBuilder& add_edge(std::size_t u, std::size_t v) {
    check(u, v);
    set(u, v, true);
    set(v, u, true);
    return *this;
  }

  GraphBuilder& remove_edge(std::size_t u, std::size_t v) {
    check(u, v);
    set(u, v, false);
    set(v, u, false);
    return *this;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  Graph build(std::string label = {}) const {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = bits_;
    g.label_ = std::move(label);
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (has_edge(u, u)) throw InvalidArgument("adjacency has a loop at vertex " + std::to_string(u));
      for (std::size_t w = 0; w < words_; ++w) degree_sum += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
    }
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (has_edge(u, v) != has_edge(v, u)) throw InvalidArgument("adjacency is not symmetric");
    g.m_ = degree_sum / 2;
    return g;
  }

 private:
  void check(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_)
      throw InvalidArgument("vertex out of range: (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") with n = " + std::to_string(n_));
    if (u == v) throw InvalidArgument("loops are not allowed (vertex " + std::to_string(u) + ")");
  }

  void set(std::size_t u, std::size_t v, bool on) {
    auto& word = bits_[u * words_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    word = on ? (word | mask) : (word & ~mask);
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string label) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build(std::move(label));
}

inline Graph Graph::from_adjacency(const std::vector<std::vector<int>>& matrix, std::string label) {
  const std::size_t n = matrix.size();
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw InvalidArgument("adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != 0 && matrix[i][j] != 1) throw InvalidArgument("adjacency entries must be 0 or 1");
      if (matrix[i][j] != matrix[j][i]) throw InvalidArgument("adjacency matrix is not symmetric");
      if (matrix[i][j] == 1) {
        if (i == j) throw InvalidArgument("adjacency has a loop at vertex " + std::to_string(i));
        if (i < j) b.add_edge(i, j);
      }
    }
  }
  return b.build(std::move(label));
}

struct DegreeProfile {
  std::vector<std::size_t> degrees;  // ascending
  bool is_regular = false;
  std::size_t r = 0;                 // common degree; meaningful when is_regular
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) p.degrees.push_back(g.degree(u));
  std::sort(p.degrees.begin(), p.degrees.end());
  p.is_regular = !p.degrees.empty() && p.degrees.front() == p.degrees.back();
  p.r = p.is_regular ? p.degrees.front() : 0;
  return p;
}

inline bool is_regular(const Graph& g) { return degree_profile(g).is_regular; }

// ---------------------------------------------------------------------------
// Elementary constructors

inline Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build("K" + std::to_string(n));
}

inline Graph empty_graph(std::size_t n) { return GraphBuilder(n).build("empty(" + std::to_string(n) + ")"); }

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return b.build("C" + std::to_string(n));
}

inline Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build("P" + std::to_string(n));
}

/// K_{p1,...,pr}: vertices of part i are consecutive; adjacent iff in different parts.
inline Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw InvalidArgument("complete_multipartite needs at least one part");
  std::size_t n = 0;
  for (auto p : parts) {
    if (p == 0) throw InvalidArgument("part sizes must be positive");
    n += p;
  }
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  std::string label = "K(";
  for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "," : "") + std::to_string(parts[i]);
  return b.build(label + ")");
}

inline Graph complete_multipartite(std::initializer_list<std::size_t> parts) {
  return complete_multipartite(std::span<const std::size_t>(parts.begin(), parts.size()));
}

inline Graph complete_bipartite(std::size_t p, std::size_t q) { return complete_multipartite({p, q}); }

/// K_{l,l} with a perfect matching removed; vertex i is matched to l + i.
inline Graph k_minus(std::size_t l) {
  if (l <= 2) throw InvalidArgument("k_minus needs l > 2");
  GraphBuilder b(2 * l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (i != j) b.add_edge(i, l + j);
  return b.build("Kminus(" + std::to_string(l) + ")");
}

// ---------------------------------------------------------------------------
// Operations

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build("complement(" + g.label() + ")");
}

/// Vertex k of the line graph is edge k of `g.edges()`.
inline Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  if (es.empty()) throw InvalidArgument("line graph of an edgeless graph is undefined");
  GraphBuilder b(es.size());
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v) b.add_edge(i, j);
  return b.build("line(" + g.label() + ")");
}

/// Adds apex vertex n adjacent to every vertex of g.
inline Graph cone(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n + 1);
  for (const auto& e : g.edges()) b.add_edge(e.u, e.v);
  for (std::size_t u = 0; u < n; ++u) b.add_edge(u, n);
  return b.build("cone(" + g.label() + ")");
}

/// Adjacency A (x) J_m. Vertex (u, i) has index u*m + i.
inline Graph tensor_j(const Graph& g, std::size_t m) {
  if (m == 0) throw InvalidArgument("tensor_j needs m >= 1");
  GraphBuilder b(g.order() * m);
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) b.add_edge(e.u * m + i, e.v * m + j);
  return b.build("tensorJ(" + g.label() + "," + std::to_string(m) + ")");
}

/// Adjacency (A + I) (x) J_m - I. Vertex (u, i) has index u*m + i.
inline Graph star_j(const Graph& g, std::size_t m) {
  if (m == 0) throw InvalidArgument("star_j needs m >= 1");
  GraphBuilder b(g.order() * m);
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) b.add_edge(e.u * m + i, e.v * m + j);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) b.add_edge(u * m + i, u * m + j);
  return b.build("starJ(" + g.label() + "," + std::to_string(m) + ")");
}

/// Cartesian product; vertex (u, x) has index u*|V(h)| + x.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  GraphBuilder b(g.order() * nh);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (const auto& e : h.edges()) b.add_edge(u * nh + e.u, u * nh + e.v);
  for (const auto& e : g.edges())
    for (std::size_t x = 0; x < nh; ++x) b.add_edge(e.u * nh + x, e.v * nh + x);
  return b.build("cartesian(" + g.label() + "," + h.label() + ")");
}

inline Graph disjoint_union(std::span<const Graph> gs) {
  if (gs.empty()) throw InvalidArgument("disjoint_union needs at least one graph");
  std::size_t n = 0;
  for (const auto& g : gs) n += g.order();
  GraphBuilder b(n);
  std::size_t offset = 0;
  std::string label = "union(";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (const auto& e : gs[i].edges()) b.add_edge(offset + e.u, offset + e.v);
    offset += gs[i].order();
    label += (i ? "," : "") + gs[i].label();
  }
  return b.build(label + ")");
}

inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Graph on the given vertices of g; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.build(g.label());
}

/// Relabels vertices: vertex u of g becomes perm[u].
inline Graph permute(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw InvalidArgument("permutation size does not match graph order");
  GraphBuilder b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build(g.label());
}

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kInf);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t v : g.neighbors(u))
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  if (g.words_per_row() == 1) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(static_cast<std::size_t>(std::countr_zero(f)))[0];
      frontier = next & ~seen;
      seen |= next;
    }
    return static_cast<std::size_t>(std::popcount(seen)) == g.order();
  }
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == std::numeric_limits<std::size_t>::max(); });
}

struct Component {
  Graph graph;
  std::vector<std::size_t> vertices;  // vertex i of `graph` is vertices[i] of the parent
};

/// Components ordered by their smallest vertex.
inline std::vector<Component> connected_components(const Graph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> verts{s};
    seen[s] = true;
    for (std::size_t head = 0; head < verts.size(); ++head)
      for (std::size_t v : g.neighbors(verts[head]))
        if (!seen[v]) {
          seen[v] = true;
          verts.push_back(v);
        }
    std::sort(verts.begin(), verts.end());
    out.push_back({induced_subgraph(g, verts), verts});
  }
  return out;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Diameter; std::nullopt means infinite (disconnected graph).
inline std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Vertices adjacent iff their distance in g is exactly k.
inline Graph distance_graph(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("distance_graph needs k >= 1");
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto d = bfs_distances(g, u);
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (d[v] == k) b.add_edge(u, v);
  }
  return b.build("distance" + std::to_string(k) + "(" + g.label() + ")");
}

/// True iff g is complete multipartite, i.e. non-adjacency is an equivalence relation.
/// On success `parts` receives the part sizes in ascending order.
inline bool is_complete_multipartite(const Graph& g, std::vector<std::size_t>* parts = nullptr) {
  const Graph co = complement(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(co)) {
    const std::size_t k = c.graph.order();
    if (c.graph.size() != k * (k - 1) / 2) return false;
    sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end());
  if (parts) *parts = std::move(sizes);
  return true;
}

/// True iff g is K_{p,q} for some p, q >= 1, reporting the sides (p <= q).
inline bool is_complete_bipartite(const Graph& g, std::size_t* p = nullptr, std::size_t* q = nullptr) {
  std::vector<std::size_t> parts;
  if (!is_complete_multipartite(g, &parts) || parts.size() != 2) return false;
  if (p) *p = parts[0];
  if (q) *q = parts[1];
  return true;
}

}  // namespace spectral

#endif  // SPECTRAL_GRAPH_HPP
