#ifndef SPECTRAL_SURVEY_HPP
#define SPECTRAL_SURVEY_HPP

// Exhaustive labeled enumeration of small graphs and graph6 archive scans,
// with every configured check run on each graph and the results merged into
// a deterministic summary.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "spectral/classify.hpp"
#include "spectral/errors.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/isomorphism.hpp"
#include "spectral/report.hpp"

namespace spectral {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

namespace detail {

/// Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<std::pair<std::uint8_t, std::uint8_t>> graph6_pairs(std::size_t n) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) out.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
  return out;
}

inline bool mask_connected(std::size_t n, std::uint64_t mask, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs) {
  std::uint32_t adj[kMaxEnumerationOrder] = {};
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1u) {
      adj[pairs[k].first] |= 1u << pairs[k].second;
      adj[pairs[k].second] |= 1u << pairs[k].first;
    }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctz(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

inline void check_enumeration_order(std::size_t n) {
  if (n < 2 || n > kMaxEnumerationOrder)
    throw InvalidArgument("labeled enumeration needs 2 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
}

}  // namespace detail

/// The graph on n vertices whose edges are the set bits of `mask`, bit k
/// being the k-th vertex pair in graph6 order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  detail::check_enumeration_order(n);
  const auto pairs = detail::graph6_pairs(n);
  GraphBuilder b(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1u) b.add_edge(pairs[k].first, pairs[k].second);
  return b.build();
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices in increasing bitmask order,
/// optionally only the connected ones. `lo`/`hi` restrict the mask range.
class LabeledGraphs {
 public:
  LabeledGraphs(std::size_t n, bool connected_only, std::optional<std::uint64_t> lo = std::nullopt, std::optional<std::uint64_t> hi = std::nullopt)
      : n_(n), connected_only_(connected_only) {
    detail::check_enumeration_order(n);
    pairs_ = detail::graph6_pairs(n);
    total_ = std::uint64_t{1} << pairs_.size();
    lo_ = std::min(lo.value_or(0), total_);
    hi_ = std::min(hi.value_or(total_), total_);
  }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const LabeledGraphs* owner, std::uint64_t mask) : owner_(owner), mask_(mask) { settle(); }

    Graph operator*() const {
      GraphBuilder b(owner_->n_);
      for (std::size_t k = 0; k < owner_->pairs_.size(); ++k)
        if ((mask_ >> k) & 1u) b.add_edge(owner_->pairs_[k].first, owner_->pairs_[k].second);
      return b.build();
    }
    std::uint64_t mask() const { return mask_; }
    iterator& operator++() {
      ++mask_;
      settle();
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    void settle() {
      if (!owner_->connected_only_) return;
      while (mask_ < owner_->hi_ && !detail::mask_connected(owner_->n_, mask_, owner_->pairs_)) ++mask_;
    }
    const LabeledGraphs* owner_;
    std::uint64_t mask_;
  };

  iterator begin() const { return iterator(this, lo_); }
  iterator end() const { return iterator(this, hi_); }
  std::uint64_t total_masks() const { return total_; }

 private:
  std::size_t n_;
  bool connected_only_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs_;
  std::uint64_t total_ = 0, lo_ = 0, hi_ = 0;
};

inline LabeledGraphs enumerate_labeled(std::size_t n, bool connected_only) { return LabeledGraphs(n, connected_only); }

enum class SurveySource { Builtin, Graph6Stream };

struct SurveyConfig {
  std::size_t n_min = 2, n_max = 7;
  bool connected_only = true;
  SurveySource source = SurveySource::Builtin;
  std::vector<std::string> checks = check_ids();
  std::size_t parallelism = 1;  // 0: SPECTRAL_CERTIFIER_THREADS or the hardware concurrency
  bool allow_order_8 = false;   // n = 8 enumeration is opt-in
  std::istream* input = nullptr;  // graph6 records for Graph6Stream
};

struct SurveyFailure {
  std::string graph6;
  std::size_t n = 0;
  std::string check;
  std::string detail;
  friend bool operator==(const SurveyFailure&, const SurveyFailure&) = default;
};

struct SurveySkip {
  std::size_t record = 0;  // line number for streams
  std::string message;
  friend bool operator==(const SurveySkip&, const SurveySkip&) = default;
};

struct MemberRecord {
  std::string graph6;
  std::string pattern;
  std::string spectrum;
  bool certified = false;
  friend bool operator==(const MemberRecord&, const MemberRecord&) = default;
};

struct SurveySummary {
  std::size_t graphs_scanned = 0;
  std::size_t prefiltered = 0;  // n = 8 graphs with more than four float clusters, counted as Other
  std::map<std::size_t, std::size_t> per_order;
  std::map<std::string, std::size_t> pattern_counts;
  std::map<std::string, std::map<std::string, std::size_t>> verdict_counts;  // check -> status -> count
  std::vector<MemberRecord> g_members;
  std::vector<MemberRecord> h_members;
  std::vector<SurveyFailure> failures;
  std::vector<SurveySkip> skips;
  double wall_seconds = 0;

  bool ok() const { return failures.empty() && skips.empty(); }

  /// Everything except the wall time.
  bool same_results(const SurveySummary& o) const {
    return graphs_scanned == o.graphs_scanned && prefiltered == o.prefiltered && per_order == o.per_order && pattern_counts == o.pattern_counts &&
           verdict_counts == o.verdict_counts && g_members == o.g_members && h_members == o.h_members && failures == o.failures && skips == o.skips;
  }

  void merge(const SurveySummary& o) {
    graphs_scanned += o.graphs_scanned;
    prefiltered += o.prefiltered;
    for (const auto& [k, v] : o.per_order) per_order[k] += v;
    for (const auto& [k, v] : o.pattern_counts) pattern_counts[k] += v;
    for (const auto& [c, m] : o.verdict_counts)
      for (const auto& [s, v] : m) verdict_counts[c][s] += v;
    g_members.insert(g_members.end(), o.g_members.begin(), o.g_members.end());
    h_members.insert(h_members.end(), o.h_members.begin(), o.h_members.end());
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    skips.insert(skips.end(), o.skips.begin(), o.skips.end());
  }
};

namespace detail {

inline std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPECTRAL_CERTIFIER_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

inline bool needs_bounds(const std::vector<std::string>& checks) {
  for (const auto& c : checks)
    if (c == "energy-bounds" || c == "energy-equalities") return true;
  return false;
}

/// Classifies one graph and runs the checks, accumulating into `out`.
inline void survey_graph(const Graph& g, const SurveyConfig& cfg, bool prefilter, SurveySummary& out) {
  const std::size_t n = g.order();
  out.graphs_scanned += 1;
  out.per_order[n] += 1;
  const std::string g6 = write_graph6(g);
  if (prefilter && float_spectrum(g).clusters().size() > 4) {
    out.prefiltered += 1;
    out.pattern_counts["Other"] += 1;
    return;
  }
  try {
    const Analysis a = analyze(g);
    out.pattern_counts[a.pattern.name()] += 1;
    if (a.m > 0) {
      if (in_G(a).member) out.g_members.push_back({g6, a.pattern.to_string(), spectrum_string(a.spectrum), a.certified()});
      if (in_H(a).member) out.h_members.push_back({g6, a.pattern.to_string(), spectrum_string(a.spectrum), a.certified()});
    }
    std::optional<BoundReport> bounds;
    if (a.m > 0 && needs_bounds(cfg.checks)) bounds = bound_report(a.spectrum, a.n, a.m);
    for (const auto& id : cfg.checks) {
      const Verdict v = run_check(id, a, bounds);
      out.verdict_counts[id][v.status_name()] += 1;
      if (v.failed()) out.failures.push_back({g6, n, id, v.detail});
    }
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception& e) {
    out.failures.push_back({g6, n, "analysis", e.what()});
  }
}

/// Runs `work(i, partial)` for i in [0, count) on `workers` threads and
/// merges the partial summaries in index order.
template <class Work>
SurveySummary run_chunks(std::size_t count, std::size_t workers, Work work) {
  std::vector<SurveySummary> partial(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i, partial[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  SurveySummary out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace detail

/// Runs the configured checks over the enumeration or the graph6 stream.
/// Any failing check is recorded with the graph's graph6 string; graph6
/// records that cannot be parsed or exceed capacity are recorded as skips.
inline SurveySummary run_survey(const SurveyConfig& cfg) {
  if (cfg.checks.empty()) throw InvalidArgument("survey needs at least one check");
  for (const auto& id : cfg.checks)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) throw InvalidArgument("unknown check '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = detail::resolve_workers(cfg.parallelism);
  SurveySummary summary;

  if (cfg.source == SurveySource::Builtin) {
    if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) throw InvalidArgument("survey order range must satisfy 2 <= n_min <= n_max");
    if (cfg.n_max > kMaxEnumerationOrder || (cfg.n_max == kMaxEnumerationOrder && !cfg.allow_order_8))
      throw InvalidArgument("built-in enumeration above n = 7 needs the order-8 opt-in (and never exceeds 8)");
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
      const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 1024));
      const bool prefilter = n == kMaxEnumerationOrder;
      summary.merge(detail::run_chunks(chunks, workers, [&](std::size_t i, SurveySummary& out) {
        const std::uint64_t lo = total * i / chunks, hi = total * (i + 1) / chunks;
        for (const Graph& g : LabeledGraphs(n, cfg.connected_only, lo, hi)) detail::survey_graph(g, cfg, prefilter, out);
      }));
    }
  } else {
    if (!cfg.input) throw InvalidArgument("graph6 survey needs an input stream");
    std::vector<std::string> lines;
    for (std::string line; std::getline(*cfg.input, line);) lines.push_back(std::move(line));
    if (cfg.input->bad()) throw Error("read error on graph6 input");
    const std::size_t chunks = std::min<std::size_t>(std::max<std::size_t>(lines.size(), 1), 1024);
    summary.merge(detail::run_chunks(chunks, workers, [&](std::size_t i, SurveySummary& out) {
      const std::size_t lo = lines.size() * i / chunks, hi = lines.size() * (i + 1) / chunks;
      for (std::size_t k = lo; k < hi; ++k) {
        std::string_view line = lines[k];
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
        if (line.empty() || line.front() == '#') continue;
        std::optional<Graph> g;
        try {
          g = parse_graph6(line);
        } catch (const ParseError& e) {
          out.skips.push_back({k + 1, "parse error: " + std::string(e.what())});
          continue;
        } catch (const CapacityError& e) {
          out.skips.push_back({k + 1, std::string("capacity: ") + e.what()});
          continue;
        }
        if (cfg.connected_only && !is_connected(*g)) continue;
        detail::survey_graph(*g, cfg, false, out);
      }
    }));
  }
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

/// JSON form of a summary; the wall time is left out when `with_time` is false.
inline nlohmann::ordered_json to_json(const SurveySummary& s, bool with_time = true) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["graphs_scanned"] = s.graphs_scanned;
  j["prefiltered"] = s.prefiltered;
  nlohmann::ordered_json orders = nlohmann::ordered_json::object();
  for (const auto& [n, c] : s.per_order) orders[std::to_string(n)] = c;
  j["per_order"] = orders;
  j["pattern_counts"] = s.pattern_counts;
  j["verdict_counts"] = s.verdict_counts;
  auto members = [](const std::vector<MemberRecord>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& m : v) arr.push_back({{"graph6", m.graph6}, {"pattern", m.pattern}, {"spectrum", m.spectrum}, {"certified", m.certified}});
    return arr;
  };
  j["g_members"] = members(s.g_members);
  j["h_members"] = members(s.h_members);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : s.failures) failures.push_back({{"graph6", f.graph6}, {"n", f.n}, {"check", f.check}, {"detail", f.detail}});
  j["failures"] = failures;
  nlohmann::ordered_json skips = nlohmann::ordered_json::array();
  for (const auto& k : s.skips) skips.push_back({{"record", k.record}, {"message", k.message}});
  j["skips"] = skips;
  if (with_time) j["wall_seconds"] = s.wall_seconds;
  return j;
}

/// Connected members of G on n vertices, one per isomorphism class, in
/// order of first appearance in the labeled enumeration.
inline std::vector<std::pair<std::string, ClassReport>> census_G(std::size_t n) {
  detail::check_enumeration_order(n);
  struct Rep {
    std::string key;
    Graph graph;
  };
  std::vector<Rep> reps;
  for (const Graph& g : LabeledGraphs(n, true)) {
    const Analysis a = analyze(g);
    if (!in_G(a).member) continue;
    std::string key = spectrum_string(a.spectrum) + "|";
    for (auto d : a.degrees.degrees) key += std::to_string(d) + ",";
    bool seen = false;
    for (const auto& r : reps)
      if (r.key == key && are_isomorphic(r.graph, g)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back({std::move(key), g});
  }
  std::vector<std::pair<std::string, ClassReport>> out;
  for (const auto& r : reps) out.emplace_back(write_graph6(r.graph), classify(r.graph));
  return out;
}

}  // namespace spectral

#endif  // SPECTRAL_SURVEY_HPP
