#ifndef SPECTRAL_CLASSIFY_HPP
#define SPECTRAL_CLASSIFY_HPP

// Spectral classification of a graph: the shape of its spectrum, membership
// in the class G (all nonzero eigenvalues except one copy of the index share
// one absolute value) and in the class H (connected, irregular,
// |l2| = ... = |ln|), strongly regular / design / multiplicative structure,
// and falsifiable checks of the structural characterization of each spectral shape.
//
// Spectral shapes (l the index, m > 0 unless noted):
//   TwoDistinct(l, r)            {l, -1^l}: the complete graph K_r, r = l + 1
//   Case1a(l, m < 0, t)          {l, 0^(n-t-1), m^t}
//   Case1b(l, m, t)              {l, m^(n-t-1), (-m)^t}
//   Case2(l, m, t, k)            {l, m^(n-k-t-1), 0^t, (-m)^k}
//   DisconnectedSymmetric(l, t)  {l^t, 0^(n-2t), (-l)^t}
//   DisconnectedIndexed(l, m, t, k)  {l, m^t, 0^(n-t-k-1), (-m)^k}, disconnected

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectral/energy.hpp"
#include "spectral/errors.hpp"
#include "spectral/families.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/isomorphism.hpp"
#include "spectral/spectra.hpp"
#include "spectral/srg.hpp"

namespace spectral {

/// An eigenvalue as used by patterns: always a double, exact when certified.
struct PatternValue {
  double approx = 0;
  std::optional<ExactEigenvalue> exact;

  std::string to_string() const { return exact ? exact->to_string() : detail::format_double(approx); }
};

struct SpectrumPattern {
  enum class Kind { Empty, TwoDistinct, Case1a, Case1b, Case2, DisconnectedSymmetric, DisconnectedIndexed, Other };

  Kind kind = Kind::Other;
  PatternValue lambda;
  PatternValue mu;
  std::size_t r = 0, t = 0, k = 0;

  std::string name() const {
    switch (kind) {
      case Kind::Empty: return "Empty";
      case Kind::TwoDistinct: return "TwoDistinct";
      case Kind::Case1a: return "Case1a";
      case Kind::Case1b: return "Case1b";
      case Kind::Case2: return "Case2";
      case Kind::DisconnectedSymmetric: return "DisconnectedSymmetric";
      case Kind::DisconnectedIndexed: return "DisconnectedIndexed";
      case Kind::Other: return "Other";
    }
    return "Other";
  }

  /// "Case1b(14,2,14)", "TwoDistinct(3,4)", "Other".
  std::string to_string() const {
    const auto s = [](std::size_t x) { return std::to_string(x); };
    switch (kind) {
      case Kind::Empty:
      case Kind::Other: return name();
      case Kind::TwoDistinct: return name() + "(" + lambda.to_string() + "," + s(r) + ")";
      case Kind::Case1a:
      case Kind::Case1b: return name() + "(" + lambda.to_string() + "," + mu.to_string() + "," + s(t) + ")";
      case Kind::Case2:
      case Kind::DisconnectedIndexed: return name() + "(" + lambda.to_string() + "," + mu.to_string() + "," + s(t) + "," + s(k) + ")";
      case Kind::DisconnectedSymmetric: return name() + "(" + lambda.to_string() + "," + s(t) + ")";
    }
    return name();
  }

  bool in_class() const { return kind != Kind::Empty && kind != Kind::Other; }
};

namespace detail {

inline constexpr double kPatternTolerance = 1e-6;

struct ViewEntry {
  PatternValue value;
  std::size_t multiplicity = 0;
};

/// Eigenvalues with multiplicities, descending, exact or clustered floats.
struct SpectrumView {
  std::vector<ViewEntry> entries;
  bool exact = false;

  bool is_zero(const PatternValue& v) const { return exact ? v.exact->sign() == 0 : std::abs(v.approx) <= kPatternTolerance; }

  bool same(const PatternValue& a, const PatternValue& b) const {
    if (exact) return *a.exact == *b.exact;
    return std::abs(a.approx - b.approx) <= kPatternTolerance * std::max(1.0, std::abs(a.approx));
  }

  bool opposite(const PatternValue& a, const PatternValue& b) const {
    if (exact) return *a.exact == b.exact->negated();
    return std::abs(a.approx + b.approx) <= kPatternTolerance * std::max(1.0, std::abs(a.approx));
  }

  bool same_abs(const PatternValue& a, const PatternValue& b) const { return same(a, b) || opposite(a, b); }

  std::size_t order() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
  }

  /// Every eigenvalue once per multiplicity, descending, without one copy of the index.
  std::vector<PatternValue> without_index() const {
    std::vector<PatternValue> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
      out.insert(out.end(), entries[i].multiplicity - (i == 0 ? 1 : 0), entries[i].value);
    return out;
  }
};

inline SpectrumView make_view(const ExactSpectrum& s) {
  SpectrumView v;
  v.exact = true;
  for (const auto& e : s.entries()) v.entries.push_back({{e.value.to_double(), e.value}, e.multiplicity});
  return v;
}

inline SpectrumView make_view(const FloatSpectrum& s) {
  SpectrumView v;
  for (const auto& c : s.clusters()) v.entries.push_back({{std::abs(c.center) <= kPatternTolerance ? 0.0 : c.center, std::nullopt}, c.multiplicity});
  return v;
}

inline SpectrumView make_view(const SpectrumResult& s) { return s.exact ? make_view(*s.exact) : make_view(s.floating); }

inline SpectrumPattern classify_view(const SpectrumView& v, std::optional<bool> connected) {
  using Kind = SpectrumPattern::Kind;
  SpectrumPattern p;
  const auto& e = v.entries;
  if (e.empty()) return p;
  if (e.size() == 1 && v.is_zero(e[0].value)) {
    p.kind = Kind::Empty;
    return p;
  }
  const PatternValue& lambda = e[0].value;
  p.lambda = lambda;
  const std::size_t n = v.order();

  // Symmetric spectrum {l^a, 0^b, (-l)^a}: only possible for unions of
  // complete bipartite graphs with equal edge products and isolated vertices.
  auto symmetric = [&]() -> bool {
    if (e.size() == 2) return v.opposite(e[1].value, lambda) && e[1].multiplicity == e[0].multiplicity;
    if (e.size() == 3) return v.is_zero(e[1].value) && v.opposite(e[2].value, lambda) && e[2].multiplicity == e[0].multiplicity;
    return false;
  };

  if (e[0].multiplicity > 1 || connected == false) {
    if (symmetric()) {
      p.kind = Kind::DisconnectedSymmetric;
      p.t = e[0].multiplicity;
      return p;
    }
    if (e[0].multiplicity > 1) return p;
  }

  if (e.size() == 2 && e[0].multiplicity == 1 && v.same(e[1].value, PatternValue{-1.0, ExactEigenvalue::integer(-1)}) && connected != false) {
    p.kind = Kind::TwoDistinct;
    p.r = n;
    return p;
  }

  if (connected == false) {
    // {l, m^t, 0^z, (-m)^k} with l > m > 0
    std::optional<PatternValue> pos, neg;
    std::size_t t = 0, k = 0;
    for (std::size_t i = 1; i < e.size(); ++i) {
      const auto& x = e[i].value;
      if (v.is_zero(x)) continue;
      if (x.approx > 0) {
        if (pos) return p;
        pos = x;
        t = e[i].multiplicity;
      } else {
        if (neg) return p;
        neg = x;
        k = e[i].multiplicity;
      }
    }
    if (!neg || (pos && !v.opposite(*pos, *neg))) return p;
    p.kind = Kind::DisconnectedIndexed;
    p.mu = pos ? *pos : PatternValue{-neg->approx, neg->exact ? std::optional(neg->exact->negated()) : std::nullopt};
    p.t = t;
    p.k = k;
    return p;
  }

  if (e.size() == 3) {
    if (v.is_zero(e[1].value) && e[2].value.approx < 0) {
      p.kind = Kind::Case1a;
      p.mu = e[2].value;
      p.t = e[2].multiplicity;
      return p;
    }
    if (e[1].value.approx > 0 && v.opposite(e[1].value, e[2].value)) {
      p.kind = Kind::Case1b;
      p.mu = e[1].value;
      p.t = e[2].multiplicity;
      return p;
    }
    return p;
  }
  if (e.size() == 4 && e[1].value.approx > 0 && v.is_zero(e[2].value) && v.opposite(e[1].value, e[3].value)) {
    p.kind = Kind::Case2;
    p.mu = e[1].value;
    p.t = e[2].multiplicity;
    p.k = e[3].multiplicity;
    return p;
  }
  return p;
}

}  // namespace detail

/// Maps a spectrum onto the shapes above. `connected` selects between the
/// connected shapes and the disconnected ones; a non-simple index always
/// means a disconnected graph. Anything else is Other.
inline SpectrumPattern classify_pattern(const ExactSpectrum& s, std::optional<bool> connected = std::nullopt) {
  return detail::classify_view(detail::make_view(s), connected);
}
inline SpectrumPattern classify_pattern(const FloatSpectrum& s, std::optional<bool> connected = std::nullopt) {
  return detail::classify_view(detail::make_view(s), connected);
}
inline SpectrumPattern classify_pattern(const SpectrumResult& s, std::optional<bool> connected = std::nullopt) {
  return detail::classify_view(detail::make_view(s), connected);
}

/// Everything the classifiers need about one graph, computed once.
struct Analysis {
  Graph graph;
  std::size_t n = 0, m = 0;
  bool connected = false;
  DegreeProfile degrees;
  SpectrumResult spectrum;
  SpectrumPattern pattern;

  bool certified() const { return spectrum.exact.has_value(); }
  bool integral() const { return spectrum.exact && spectrum.exact->is_integral(); }
};

inline Analysis analyze(const Graph& g) {
  Analysis a;
  a.graph = g;
  a.n = g.order();
  a.m = g.size();
  a.connected = is_connected(g);
  a.degrees = degree_profile(g);
  a.spectrum = exact_spectrum(g);
  a.pattern = classify_pattern(a.spectrum, a.connected);
  return a;
}

/// Number of distinct eigenvalues: exact from the certified spectrum or the
/// minimal polynomial while it is small; above five only a lower bound (the
/// float cluster count), which is enough to rule out three or four.
inline std::size_t distinct_eigenvalue_count(const Analysis& a) {
  if (a.spectrum.exact) return a.spectrum.exact->distinct_count();
  const std::size_t clusters = a.spectrum.floating.clusters().size();
  if (clusters <= 5) return exact_distinct_eigenvalue_count(a.graph);
  return clusters;
}

/// Whether the second largest eigenvalue is <= 0, decided exactly.
inline bool second_eigenvalue_nonpositive(const Analysis& a) {
  if (a.n < 2) return true;
  if (a.spectrum.exact) {
    const auto& e = a.spectrum.exact->entries();
    return e[0].multiplicity == 1 ? e[1].value.sign() <= 0 : e[0].value.sign() <= 0;
  }
  const double l2 = a.spectrum.floating.values()[1];
  if (l2 > detail::kPatternTolerance) return false;
  if (l2 < -detail::kPatternTolerance) return true;
  return exact_positive_eigenvalue_count(a.graph) <= 1;
}

/// Whether the index is an integer, decided exactly.
inline bool index_is_integer(const Analysis& a) {
  if (a.spectrum.exact) return a.spectrum.exact->index().is_integer();
  const double l1 = a.spectrum.floating.values().front();
  const double r = std::round(l1);
  if (std::abs(l1 - r) > detail::kPatternTolerance) return false;
  return certify_integer_eigenvalue(a.graph, static_cast<std::int64_t>(r)) > 0;
}

// ---------------------------------------------------------------------------
// Membership.

struct MembershipResult {
  bool member = false;
  bool certified = false;  // decided on an exactly certified spectrum
  SpectrumPattern witness;
};

/// Membership in G, tested literally: after removing one copy of the index,
/// all nonzero eigenvalues have the same absolute value.
inline MembershipResult in_G(const Analysis& a) {
  if (a.m == 0) throw InvalidArgument("class membership is defined for graphs with at least one edge");
  const auto view = detail::make_view(a.spectrum);
  std::optional<PatternValue> first;
  bool member = true;
  for (const auto& x : view.without_index()) {
    if (view.is_zero(x)) continue;
    if (!first)
      first = x;
    else if (!view.same_abs(*first, x))
      member = false;
  }
  return {member, a.certified(), a.pattern};
}

/// |l2| = ... = |ln|, zero included: the equality case of the upper bound.
inline bool equal_nonindex_absolute_values(const Analysis& a) {
  const auto view = detail::make_view(a.spectrum);
  const auto rest = view.without_index();
  for (const auto& x : rest)
    if (!view.same_abs(rest.front(), x)) return false;
  return true;
}

/// Membership in H: connected, irregular and |l2| = ... = |ln|.
inline MembershipResult in_H(const Analysis& a) {
  const bool member = a.m > 0 && a.connected && !a.degrees.is_regular && equal_nonindex_absolute_values(a);
  return {member, a.certified(), a.pattern};
}

inline MembershipResult in_G(const Graph& g) { return in_G(analyze(g)); }
inline MembershipResult in_H(const Graph& g) { return in_H(analyze(g)); }

// ---------------------------------------------------------------------------
// Structure.

struct DesignParams {
  std::size_t n = 0, r = 0, alpha = 0;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// An srg(n, r, a, a). When the spectrum is Case1b {r, m, -m}, also checks a = r - m^2.
inline std::optional<DesignParams> is_design_graph(const Analysis& a) {
  const auto srg = detect_srg(a.graph);
  if (!srg || srg->alpha != srg->beta) return std::nullopt;
  const DesignParams d{srg->n, srg->r, srg->alpha};
  if (a.pattern.kind == SpectrumPattern::Kind::Case1b && a.pattern.mu.exact) {
    const std::int64_t expect = static_cast<std::int64_t>(srg->r) - a.pattern.mu.exact->square();
    if (expect != static_cast<std::int64_t>(srg->alpha))
      throw CertificationError("design graph with alpha " + std::to_string(srg->alpha) + " but index minus mu^2 is " + std::to_string(expect));
  }
  return d;
}

inline std::optional<DesignParams> is_design_graph(const Graph& g) { return is_design_graph(analyze(g)); }

struct MultiplicativeResult {
  std::int64_t d = 0;
  std::vector<std::int64_t> alpha_sq;  // squared entries of the vector a in A^2 = dI + a a^T
};

/// A^2 = dI + a a^T with a > 0 entrywise. Then C = A^2 - dI is rank one with
/// a positive diagonal, i.e. C_ij^2 = C_ii C_jj and C_ij >= 0 for all i, j.
/// Tries only `d_hint` when given, else every d below the minimum degree.
inline std::optional<MultiplicativeResult> is_multiplicative(const Graph& g, std::optional<std::int64_t> d_hint = std::nullopt) {
  const std::size_t n = g.order();
  const auto profile = degree_profile(g);
  if (profile.degrees.empty() || profile.degrees.front() == 0) return std::nullopt;
  std::vector<std::int64_t> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = static_cast<std::int64_t>(i == j ? g.degree(i) : g.common_neighbors(i, j));
  const auto min_deg = static_cast<std::int64_t>(profile.degrees.front());
  auto try_d = [&](std::int64_t d) -> std::optional<MultiplicativeResult> {
    if (d < 0 || d >= min_deg) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int64_t cij = b[i * n + j];
        if (cij * cij != (b[i * n + i] - d) * (b[j * n + j] - d)) return std::nullopt;
      }
    MultiplicativeResult r{d, {}};
    for (std::size_t i = 0; i < n; ++i) r.alpha_sq.push_back(b[i * n + i] - d);
    return r;
  };
  if (d_hint) return try_d(*d_hint);
  for (std::int64_t d = 0; d < min_deg; ++d)
    if (auto r = try_d(d)) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Checks. Each returns Pass or Fail when its hypotheses hold for the graph
// and NotApplicable otherwise.

struct Verdict {
  enum class Status { Pass, Fail, NotApplicable };
  Status status = Status::NotApplicable;
  std::string branch;
  std::string detail;

  static Verdict pass(std::string branch, std::string detail = {}) { return {Status::Pass, std::move(branch), std::move(detail)}; }
  static Verdict fail(std::string detail) { return {Status::Fail, {}, std::move(detail)}; }
  static Verdict not_applicable(std::string why) { return {Status::NotApplicable, {}, std::move(why)}; }

  bool failed() const { return status == Status::Fail; }
  bool passed() const { return status == Status::Pass; }

  std::string status_name() const {
    switch (status) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      case Status::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
  }
};

/// Connected, spectrum {l, 0^(n-t-1), m^t}: either m = -l and the graph is
/// complete bipartite, or m != -l and it is the complete (t+1)-partite graph
/// with all parts of size -m, integral, t >= 2. Both directions are checked.
inline Verdict verify_multipartite_zero_case(const Analysis& a) {
  if (!a.connected || a.pattern.kind != SpectrumPattern::Kind::Case1a) return Verdict::not_applicable("not a connected Case1a spectrum");
  if (!a.certified()) return Verdict::fail("Case1a spectrum without exact certification");
  const ExactEigenvalue lambda = *a.pattern.lambda.exact, mu = *a.pattern.mu.exact;
  std::size_t p = 0, q = 0;
  const bool bipartite = is_complete_bipartite(a.graph, &p, &q);
  if (mu == lambda.negated()) {
    if (!bipartite) return Verdict::fail("mu = -lambda but the graph is not complete bipartite");
    if (static_cast<std::int64_t>(p * q) != lambda.square()) return Verdict::fail("complete bipartite with pq != lambda^2");
    return Verdict::pass("complete-bipartite", "K" + std::to_string(p) + "," + std::to_string(q));
  }
  if (bipartite) return Verdict::fail("complete bipartite but mu != -lambda");
  std::vector<std::size_t> parts;
  if (!is_complete_multipartite(a.graph, &parts)) return Verdict::fail("mu != -lambda but the graph is not complete multipartite");
  if (!mu.is_integer() || !a.integral()) return Verdict::fail("complete multipartite case is not integral");
  if (a.pattern.t < 2) return Verdict::fail("complete multipartite case with t < 2");
  if (parts.size() != a.pattern.t + 1) return Verdict::fail("number of parts is not t + 1");
  for (auto s : parts)
    if (static_cast<std::int64_t>(s) != -mu.value()) return Verdict::fail("a part has size other than -mu");
  return Verdict::pass("equal-parts", std::to_string(parts.size()) + " parts of size " + std::to_string(-mu.value()));
}

namespace detail {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The irregular multiplicative graphs with second eigenvalue 2.
inline const std::vector<NamedGraph>& mu2_targets() {
  static const std::vector<NamedGraph> targets = {
      {"cone-shrikhande", cone(shrikhande())}, {"cone-l2_4", cone(lattice_l2_4())}, {"ag32", ag32_graph()}};
  return targets;
}

}  // namespace detail

/// Connected, spectrum {l, m^(n-t-1), (-m)^t}: integral, m >= 2 and
/// multiplicative with d = m^2. Regular graphs are design graphs
/// (n, l, l - m^2, l - m^2); irregular ones with m = 2 are one of three known
/// graphs; irregular ones with m >= 3 have more than 30 vertices.
inline Verdict verify_multiplicative_case(const Analysis& a) {
  if (!a.connected || a.pattern.kind != SpectrumPattern::Kind::Case1b) return Verdict::not_applicable("not a connected Case1b spectrum");
  if (!a.integral()) return Verdict::fail("Case1b spectrum is not certified integral");
  const std::int64_t lambda = a.pattern.lambda.exact->value(), mu = a.pattern.mu.exact->value();
  if (mu < 2) return Verdict::fail("second eigenvalue below 2");
  if (!is_multiplicative(a.graph, mu * mu)) return Verdict::fail("A^2 - mu^2 I is not a positive rank-one matrix");
  if (a.degrees.is_regular) {
    const auto d = is_design_graph(a);
    if (!d) return Verdict::fail("regular Case1b graph is not a design graph");
    if (static_cast<std::int64_t>(d->r) != lambda || static_cast<std::int64_t>(d->alpha) != lambda - mu * mu)
      return Verdict::fail("design parameters differ from (n, lambda, lambda - mu^2, lambda - mu^2)");
    return Verdict::pass("design-graph", "(" + std::to_string(d->n) + "," + std::to_string(d->r) + "," + std::to_string(d->alpha) + ")");
  }
  if (mu == 2) {
    for (const auto& t : detail::mu2_targets())
      if (are_isomorphic(a.graph, t.graph)) return Verdict::pass("mu2-known", t.name);
    return Verdict::fail("irregular with mu = 2 but not one of the known graphs");
  }
  if (a.n <= 30) return Verdict::fail("irregular with mu >= 3 on at most 30 vertices");
  return Verdict::pass("mu3-large", std::to_string(a.n) + " vertices");
}

/// Connected, spectrum {l, m^(n-k-t-1), 0^t, (-m)^k}: integral. When regular,
/// either the index is the only simple eigenvalue or the graph is the
/// complement of Q3 with clone cliques of size m/2.
inline Verdict verify_four_eigenvalue_case(const Analysis& a) {
  if (!a.connected || a.pattern.kind != SpectrumPattern::Kind::Case2) return Verdict::not_applicable("not a connected Case2 spectrum");
  if (!a.integral()) return Verdict::fail("Case2 spectrum is not certified integral");
  if (!a.degrees.is_regular) return Verdict::pass("irregular-case2");
  const auto& e = a.spectrum.exact->entries();
  const bool other_simple = std::any_of(e.begin() + 1, e.end(), [](const SpectrumEntry& x) { return x.multiplicity == 1; });
  if (!other_simple) return Verdict::pass("index-only-simple");
  const std::int64_t mu = a.pattern.mu.exact->value();
  if (mu % 2 != 0) return Verdict::fail("regular Case2 graph with a second simple eigenvalue and odd mu");
  const Graph target = complement(star_j(k_minus(4), static_cast<std::size_t>(mu / 2)));
  if (!are_isomorphic(a.graph, target)) return Verdict::fail("regular Case2 graph with a second simple eigenvalue is not the Q3 blow-up complement");
  return Verdict::pass("q3-blowup-complement", "m = " + std::to_string(mu / 2));
}

/// Disconnected graphs with an edge. (i) All nonzero eigenvalues share |l|
/// iff every non-isolated component is K_{p,q} with pq = l^2; then l = 1 iff
/// they are all K2. (ii) Otherwise, if the graph is in G, it is integral,
/// exactly one component G1 carries the index, G1 is in G, every other
/// non-isolated component is K_{p,q} with pq = m^2, and m = 1 iff G1 is
/// complete and the others are K2.
inline Verdict verify_disconnected_case(const Analysis& a) {
  if (a.connected || a.m == 0) return Verdict::not_applicable("connected or edgeless");
  const auto view = detail::make_view(a.spectrum);
  const PatternValue lambda = view.entries.front().value;
  auto matches_square = [&](std::size_t pq, const PatternValue& x) {
    return x.exact ? static_cast<std::int64_t>(pq) == x.exact->square() : std::abs(static_cast<double>(pq) - x.approx * x.approx) <= 1e-6;
  };

  bool all_abs_lambda = true;
  for (const auto& e : view.entries)
    if (!view.is_zero(e.value) && !view.same_abs(e.value, lambda)) all_abs_lambda = false;

  const auto comps = connected_components(a.graph);
  bool all_bipartite_lambda = true, all_k2 = true;
  for (const auto& c : comps) {
    if (c.graph.order() == 1) continue;
    std::size_t p = 0, q = 0;
    if (!is_complete_bipartite(c.graph, &p, &q) || !matches_square(p * q, lambda)) all_bipartite_lambda = false;
    if (c.graph.order() != 2) all_k2 = false;
  }
  if (all_abs_lambda != all_bipartite_lambda)
    return Verdict::fail(all_abs_lambda ? "symmetric spectrum but a component is not K_{p,q} with pq = lambda^2"
                                        : "components K_{p,q} with pq = lambda^2 but the spectrum is not symmetric");
  if (all_abs_lambda) {
    const bool lambda_one = view.same(lambda, PatternValue{1.0, ExactEigenvalue::integer(1)});
    if (lambda_one != all_k2) return Verdict::fail("lambda = 1 does not match all components being K2");
    return Verdict::pass("symmetric");
  }

  if (!in_G(a).member) return Verdict::pass("non-member");
  if (!a.integral()) return Verdict::fail("member with two absolute values is not certified integral");
  const auto& p = a.pattern;
  if (p.kind != SpectrumPattern::Kind::DisconnectedIndexed) return Verdict::fail("member spectrum not of the indexed disconnected shape");
  if (p.k < 2) return Verdict::fail("-mu has multiplicity below 2");
  const ExactEigenvalue lam = *lambda.exact, mu = *p.mu.exact;

  std::vector<std::size_t> carriers;
  std::vector<SpectrumResult> comp_spectra;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    comp_spectra.push_back(exact_spectrum(comps[i].graph));
    const auto& cs = comp_spectra.back();
    const bool carries = cs.exact ? cs.exact->index() == lam : std::abs(cs.floating.values().front() - lam.to_double()) <= 1e-6;
    if (carries) carriers.push_back(i);
  }
  if (carriers.size() != 1) return Verdict::fail(std::to_string(carriers.size()) + " components carry the index");
  const auto& g1 = comps[carriers[0]].graph;
  if (!in_G(analyze(g1)).member) return Verdict::fail("the index component is not in G");
  bool others_k2 = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == carriers[0] || comps[i].graph.order() == 1) continue;
    std::size_t pp = 0, qq = 0;
    if (!is_complete_bipartite(comps[i].graph, &pp, &qq)) return Verdict::fail("a non-index component is not complete bipartite");
    if (static_cast<std::int64_t>(pp * qq) != mu.square()) return Verdict::fail("a non-index component K_{p,q} has pq != mu^2");
    if (comps[i].graph.order() != 2) others_k2 = false;
  }
  const bool g1_complete = g1.size() == g1.order() * (g1.order() - 1) / 2;
  if ((mu.value() == 1) != (g1_complete && others_k2)) return Verdict::fail("mu = 1 does not match a complete index component with K2 others");
  return Verdict::pass("indexed", "index component of order " + std::to_string(g1.order()));
}

/// Connected with three distinct eigenvalues and (bipartite or non-integral
/// index) implies complete bipartite.
inline Verdict check_complete_bipartite_criterion(const Analysis& a) {
  if (!a.connected || a.n < 2) return Verdict::not_applicable("not connected");
  if (distinct_eigenvalue_count(a) != 3) return Verdict::not_applicable("not three distinct eigenvalues");
  const bool bip = is_bipartite(a.graph);
  if (!bip && index_is_integer(a)) return Verdict::not_applicable("non-bipartite with integral index");
  if (!is_complete_bipartite(a.graph)) return Verdict::fail("hypotheses hold but the graph is not complete bipartite");
  return Verdict::pass(bip ? "bipartite" : "irrational-index");
}

/// Connected: complete multipartite iff the second eigenvalue is <= 0.
inline Verdict check_second_eigenvalue_criterion(const Analysis& a) {
  if (!a.connected || a.n < 2) return Verdict::not_applicable("not a connected graph with two vertices");
  const bool multipartite = is_complete_multipartite(a.graph);
  const bool nonpositive = second_eigenvalue_nonpositive(a);
  if (multipartite != nonpositive)
    return Verdict::fail(multipartite ? "complete multipartite with positive second eigenvalue"
                                      : "second eigenvalue <= 0 but not complete multipartite");
  return Verdict::pass(multipartite ? "multipartite" : "not-multipartite");
}

/// Connected: strongly regular iff regular, neither complete nor empty, with
/// exactly three distinct eigenvalues.
inline Verdict check_srg_eigenvalue_count(const Analysis& a) {
  if (!a.connected) return Verdict::not_applicable("not connected");
  const bool srg = detect_srg(a.graph).has_value();
  const bool spectral = a.degrees.is_regular && a.m > 0 && a.m < a.n * (a.n - 1) / 2 && distinct_eigenvalue_count(a) == 3;
  if (srg != spectral) return Verdict::fail(srg ? "strongly regular without exactly three eigenvalues" : "three eigenvalues, regular, but not strongly regular");
  if (srg) {
    const auto s = srg_spectrum(*detect_srg(a.graph));
    if (s.exact && a.spectrum.exact && !(*s.exact == *a.spectrum.exact)) return Verdict::fail("parameter spectrum differs from the certified spectrum");
  }
  return Verdict::pass(srg ? "srg" : "not-srg");
}

/// Connected regular with four distinct eigenvalues: the complement is
/// connected with four distinct eigenvalues, or a union of cospectral
/// strongly regular graphs.
inline Verdict check_complement_structure(const Analysis& a) {
  if (!a.connected || !a.degrees.is_regular || distinct_eigenvalue_count(a) != 4) return Verdict::not_applicable("not connected regular with four eigenvalues");
  const Analysis c = analyze(complement(a.graph));
  if (c.connected) {
    if (distinct_eigenvalue_count(c) != 4) return Verdict::fail("connected complement without four distinct eigenvalues");
    return Verdict::pass("connected-complement");
  }
  std::optional<SrgParams> common;
  for (const auto& comp : connected_components(c.graph)) {
    const auto s = detect_srg(comp.graph);
    if (!s) return Verdict::fail("a complement component is not strongly regular");
    if (common && !(*common == *s)) return Verdict::fail("complement components are not cospectral");
    common = s;
  }
  return Verdict::pass("srg-union", "srg" + common->to_string());
}

/// No connected r-regular graph has spectrum {r, -1, d^m, z^(n-2-m)} with
/// integers d, z and 2 <= m <= n-4.
inline Verdict check_forbidden_regular_spectrum(const Analysis& a) {
  if (!a.connected || !a.degrees.is_regular) return Verdict::not_applicable("not connected regular");
  if (!a.integral()) return Verdict::pass("not-integral");
  const auto& e = a.spectrum.exact->entries();
  if (e.size() != 4) return Verdict::pass("not-four-eigenvalues");
  std::vector<std::size_t> others;
  bool simple_minus_one = false;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i].value.value() == -1 && e[i].multiplicity == 1)
      simple_minus_one = true;
    else
      others.push_back(e[i].multiplicity);
  }
  if (simple_minus_one && others.size() == 2 && others[0] >= 2 && others[1] >= 2)
    return Verdict::fail("connected regular graph with the forbidden spectrum " + a.spectrum.exact->to_string());
  return Verdict::pass("absent");
}

/// Lower-bound equality holds exactly for members of G; upper-bound equality
/// exactly when |l2| = ... = |ln|.
inline Verdict check_energy_equalities(const Analysis& a, const BoundReport& b) {
  if (a.m == 0) return Verdict::not_applicable("edgeless");
  const bool member = in_G(a).member;
  if (b.nikiforov_equal != member) return Verdict::fail("lower-bound equality " + std::string(b.nikiforov_equal ? "holds" : "fails") + " but G membership is " + (member ? "true" : "false"));
  const bool flat = equal_nonindex_absolute_values(a);
  if (b.km_equal != flat) return Verdict::fail("upper-bound equality " + std::string(b.km_equal ? "holds" : "fails") + " but |l2|=...=|ln| is " + (flat ? "true" : "false"));
  return Verdict::pass(b.qualifier());
}

/// lower <= E <= upper and E <= (n/2)(1 + sqrt(n)).
inline Verdict check_energy_bounds(const Analysis& a, const BoundReport& b) {
  if (a.m == 0) return Verdict::not_applicable("edgeless");
  if (b.exact) {
    if ((*b.energy.exact - *b.nikiforov_bound.exact).sign() < 0) return Verdict::fail("energy below the lower bound");
    if ((*b.km_bound.exact - *b.energy.exact).sign() < 0) return Verdict::fail("energy above the upper bound");
    if ((*b.km_n_bound.exact - *b.energy.exact).sign() < 0) return Verdict::fail("energy above (n/2)(1+sqrt(n))");
    return Verdict::pass("exact");
  }
  if (b.energy.approx < b.nikiforov_bound.approx - kBoundTolerance) return Verdict::fail("energy below the lower bound");
  if (b.energy.approx > b.km_bound.approx + kBoundTolerance) return Verdict::fail("energy above the upper bound");
  if (b.energy.approx > b.km_n_bound.approx + kBoundTolerance) return Verdict::fail("energy above (n/2)(1+sqrt(n))");
  return Verdict::pass("approximate");
}

/// Members of G are integral unless a component is K_{p,q} with pq not a square.
inline Verdict check_integrality(const Analysis& a) {
  if (a.m == 0 || !in_G(a).member) return Verdict::not_applicable("not in G");
  if (a.integral()) return Verdict::pass("integral");
  for (const auto& c : connected_components(a.graph)) {
    std::size_t p = 0, q = 0;
    if (c.graph.order() > 1 && is_complete_bipartite(c.graph, &p, &q) && !is_perfect_square(static_cast<std::int64_t>(p * q)))
      return Verdict::pass("nonsquare-complete-bipartite", "K" + std::to_string(p) + "," + std::to_string(q));
  }
  return Verdict::fail(a.certified() ? "non-integral member without a nonsquare K_{p,q} component" : "member with an uncertified spectrum");
}

/// H is contained in G, and G membership agrees with the spectral shape.
inline Verdict check_membership_consistency(const Analysis& a) {
  if (a.m == 0) return Verdict::not_applicable("edgeless");
  const bool g = in_G(a).member, h = in_H(a).member;
  if (h && !g) return Verdict::fail("in H but not in G");
  if (g != a.pattern.in_class()) return Verdict::fail("G membership disagrees with the pattern " + a.pattern.to_string());
  if (h && a.pattern.kind != SpectrumPattern::Kind::Case1b) return Verdict::fail("H member outside Case1b");
  return Verdict::pass(h ? "in-H" : (g ? "in-G" : "outside"));
}

/// The Jacobi eigenvalues agree with the certified spectrum within 1e-8.
inline Verdict check_numeric_agreement(const Analysis& a) {
  if (!a.certified()) return Verdict::not_applicable("not certified");
  const auto exact = a.spectrum.exact->to_doubles();
  const auto& floating = a.spectrum.floating.values();
  double worst = 0;
  for (std::size_t i = 0; i < exact.size(); ++i) worst = std::max(worst, std::abs(exact[i] - floating[i]));
  if (worst > 1e-8) return Verdict::fail("float and exact spectra differ by " + detail::format_double(worst));
  return Verdict::pass("within-1e-8");
}

// ---------------------------------------------------------------------------
// Reports.

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "multipartite-zero-case",  "multiplicative-case",  "four-eigenvalue-case",  "disconnected-case",
      "complete-bipartite-criterion", "second-eigenvalue-criterion", "srg-eigenvalue-count", "complement-structure",
      "forbidden-regular-spectrum", "energy-equalities", "energy-bounds", "integrality", "membership-consistency", "numeric-agreement"};
  return ids;
}

/// Runs one check by id; throws InvalidArgument for unknown ids.
inline Verdict run_check(const std::string& id, const Analysis& a, const std::optional<BoundReport>& bounds) {
  if (id == "multipartite-zero-case") return verify_multipartite_zero_case(a);
  if (id == "multiplicative-case") return verify_multiplicative_case(a);
  if (id == "four-eigenvalue-case") return verify_four_eigenvalue_case(a);
  if (id == "disconnected-case") return verify_disconnected_case(a);
  if (id == "complete-bipartite-criterion") return check_complete_bipartite_criterion(a);
  if (id == "second-eigenvalue-criterion") return check_second_eigenvalue_criterion(a);
  if (id == "srg-eigenvalue-count") return check_srg_eigenvalue_count(a);
  if (id == "complement-structure") return check_complement_structure(a);
  if (id == "forbidden-regular-spectrum") return check_forbidden_regular_spectrum(a);
  if (id == "energy-equalities") return bounds ? check_energy_equalities(a, *bounds) : Verdict::not_applicable("edgeless");
  if (id == "energy-bounds") return bounds ? check_energy_bounds(a, *bounds) : Verdict::not_applicable("edgeless");
  if (id == "integrality") return check_integrality(a);
  if (id == "membership-consistency") return check_membership_consistency(a);
  if (id == "numeric-agreement") return check_numeric_agreement(a);
  throw InvalidArgument("unknown check '" + id + "'");
}

struct ClassReport {
  std::string label;
  std::string graph6;
  std::size_t n = 0, m = 0;
  bool connected = false, regular = false;
  bool certified = false;
  std::string spectrum;
  SpectrumPattern pattern;
  bool in_G = false, in_H = false;
  std::optional<SrgParams> srg;
  bool design = false;
  std::optional<MultiplicativeResult> multiplicative;
  bool integral = false;
  std::optional<BoundReport> bounds;
  std::map<std::string, Verdict> verdicts;
};

/// "6^1 2^6 -2^9" when certified, else float clusters with 12 significant digits.
inline std::string spectrum_string(const SpectrumResult& s) {
  if (s.exact) return s.exact->to_string();
  std::string out;
  for (const auto& c : s.floating.clusters()) {
    if (!out.empty()) out += ' ';
    out += detail::format_double(c.center) + "^" + std::to_string(c.multiplicity);
  }
  return out;
}

/// Full report; `checks` defaults to every check id.
inline ClassReport classify(const Analysis& a, const std::vector<std::string>& checks = check_ids()) {
  ClassReport r;
  r.label = a.graph.label();
  r.graph6 = a.n <= kGraph6MaxOrder ? write_graph6(a.graph) : "";
  r.n = a.n;
  r.m = a.m;
  r.connected = a.connected;
  r.regular = a.degrees.is_regular;
  r.certified = a.certified();
  r.spectrum = spectrum_string(a.spectrum);
  r.pattern = a.pattern;
  r.integral = a.integral();
  if (a.m > 0) {
    r.in_G = in_G(a).member;
    r.in_H = in_H(a).member;
    r.bounds = bound_report(a.spectrum, a.n, a.m);
  }
  r.srg = detect_srg(a.graph);
  r.design = r.srg && r.srg->alpha == r.srg->beta;
  std::optional<std::int64_t> hint;
  if (a.pattern.kind == SpectrumPattern::Kind::Case1b && a.pattern.mu.exact) hint = a.pattern.mu.exact->square();
  r.multiplicative = is_multiplicative(a.graph, hint);
  for (const auto& id : checks) r.verdicts[id] = run_check(id, a, r.bounds);
  return r;
}

inline ClassReport classify(const Graph& g) { return classify(analyze(g)); }

}  // namespace spectral

#endif  // SPECTRAL_CLASSIFY_HPP
