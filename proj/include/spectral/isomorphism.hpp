#ifndef SPECTRAL_ISOMORPHISM_HPP
#define SPECTRAL_ISOMORPHISM_HPP

// Exact isomorphism search: colour refinement seeded by degree, then
// backtracking that extends a partial map one vertex at a time and checks
// adjacency against every vertex already mapped. Intended for n <= 32, but
// works on anything whose refinement leaves little symmetry to explore.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "spectral/graph.hpp"

namespace spectral {

namespace detail {

/// Joint 1-WL refinement of two graphs so that colour ids are comparable.
inline void refine_colors(const Graph& a, const Graph& b, std::vector<std::size_t>& ca, std::vector<std::size_t>& cb) {
  ca.assign(a.order(), 0);
  cb.assign(b.order(), 0);
  for (std::size_t u = 0; u < a.order(); ++u) ca[u] = a.degree(u);
  for (std::size_t u = 0; u < b.order(); ++u) cb[u] = b.degree(u);
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [](const Graph& g, const std::vector<std::size_t>& c, std::size_t u) {
      std::vector<std::size_t> sig{c[u]};
      std::vector<std::size_t> nb;
      for (std::size_t v : g.neighbors(u)) nb.push_back(c[v]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sa(a.order()), sb(b.order());
    for (std::size_t u = 0; u < a.order(); ++u) ids.emplace(sa[u] = signature(a, ca, u), 0);
    for (std::size_t u = 0; u < b.order(); ++u) ids.emplace(sb[u] = signature(b, cb, u), 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t u = 0; u < a.order(); ++u) ca[u] = ids[sa[u]];
    for (std::size_t u = 0; u < b.order(); ++u) cb[u] = ids[sb[u]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(a.order(), kNone), used_(b.order(), false) {
    order_vertices();
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Each next vertex maximises adjacency to already-ordered vertices, ties
  // broken by smaller colour class, so consistency checks prune early.
  void order_vertices() {
    const std::size_t n = a_.order();
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : ca_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kNone;
      for (std::size_t u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best == kNone || links[u] > links[best] ||
            (links[u] == links[best] && class_size[ca_[u]] < class_size[ca_[best]]))
          best = u;
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t v : a_.neighbors(best)) ++links[v];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t x = 0; x < b_.order(); ++x) {
      if (used_[x] || cb_[x] != ca_[u]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order_[d];
        ok = a_.adjacent(u, w) == b_.adjacent(x, map_[w]);
      }
      if (!ok) continue;
      map_[u] = x;
      used_[x] = true;
      if (extend(depth + 1)) return true;
      used_[x] = false;
      map_[u] = kNone;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Returns a bijection `f` with u ~ v in `a` iff f[u] ~ f[v] in `b`, or nullopt.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (degree_profile(a).degrees != degree_profile(b).degrees) return std::nullopt;
  std::vector<std::size_t> ca, cb;
  detail::refine_colors(a, b, ca, cb);
  auto ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  return detail::IsoSearch(a, b, std::move(ca), std::move(cb)).run();
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace spectral

#endif  // SPECTRAL_ISOMORPHISM_HPP
