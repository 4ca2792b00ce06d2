// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectral/classify.hpp"
#include "spectral/energy.hpp"
#include "spectral/families.hpp"
#include "spectral/io.hpp"
#include "spectral/survey.hpp"

using namespace spectral;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs);
  const std::size_t shown = std::min<std::size_t>(o.notes.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::printf("    %s\n", o.notes[i].c_str());
  if (o.notes.size() > shown) std::printf("    ... %zu more\n", o.notes.size() - shown);
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::optional<ExactSpectrum> certified_spectrum(const Graph& g) { return exact_spectrum(g).exact; }

void expect_spectrum(Outcome& o, const std::string& name, const Graph& g, const ExactSpectrum& want) {
  const auto got = certified_spectrum(g);
  o.require(got.has_value(), name + ": not certified");
  if (got) o.require(*got == want, name + ": got " + got->to_string() + ", want " + want.to_string());
  const Verdict v = check_numeric_agreement(analyze(g));
  o.require(!v.failed(), name + ": " + v.detail);
}

void note_counts(Outcome& o, const SurveySummary& s) {
  for (const auto& [check, by_status] : s.verdict_counts) {
    std::string line = check + ":";
    for (const auto& [status, count] : by_status) line += " " + status + "=" + std::to_string(count);
    o.notes.push_back(line);
  }
}

std::size_t failures_for(const SurveySummary& s, const std::string& check) {
  return static_cast<std::size_t>(std::count_if(s.failures.begin(), s.failures.end(), [&](const SurveyFailure& f) { return f.check == check; }));
}

void list_failures(Outcome& o, const SurveySummary& s, const std::vector<std::string>& checks) {
  for (const auto& f : s.failures)
    if (std::find(checks.begin(), checks.end(), f.check) != checks.end() || f.check == "analysis")
      o.require(false, f.graph6 + " " + f.check + ": " + f.detail);
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& jumps) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (auto s : jumps)
      if (s % n != 0) b.add_edge(u, (u + s) % n);
  return b.build();
}

Polynomial x_pow(std::size_t k) { return Polynomial::x().pow(k); }

// Sweeps shared by several criteria.
SurveySummary connected_sweep, small_all_sweep, order7_all_sweep;
double connected_seconds = 0;

SurveySummary sweep(std::size_t lo, std::size_t hi, bool connected, std::size_t threads, std::vector<std::string> checks) {
  SurveyConfig cfg;
  cfg.n_min = lo;
  cfg.n_max = hi;
  cfg.connected_only = connected;
  cfg.parallelism = threads;
  cfg.checks = std::move(checks);
  return run_survey(cfg);
}

}  // namespace

int main() {
  report(1, "fixture spectra certify exactly", [] {
    Outcome o;
    const ExactSpectrum srg({{6, 1}, {2, 6}, {-2, 9}});
    expect_spectrum(o, "shrikhande", shrikhande(), srg);
    expect_spectrum(o, "L2(4)", lattice_l2_4(), srg);
    const ExactSpectrum cone_spec({{8, 1}, {2, 6}, {-2, 10}});
    expect_spectrum(o, "cone(shrikhande)", cone(shrikhande()), cone_spec);
    expect_spectrum(o, "cone(L2(4))", cone(lattice_l2_4()), cone_spec);
    const Graph ag = ag32_graph();
    expect_spectrum(o, "ag32", ag, ExactSpectrum({{14, 1}, {2, 7}, {-2, 14}}));
    std::map<std::size_t, std::size_t> degrees;
    for (std::size_t u = 0; u < ag.order(); ++u) ++degrees[ag.degree(u)];
    o.require(degrees == std::map<std::size_t, std::size_t>{{7, 8}, {16, 14}}, "ag32 degree multiset");
    for (std::int64_t l = 3; l <= 6; ++l) {
      const auto L = static_cast<std::size_t>(l);
      expect_spectrum(o, "kminus(" + std::to_string(l) + ")", k_minus(L), ExactSpectrum({{l - 1, 1}, {1, L - 1}, {-1, L - 1}, {1 - l, 1}}));
    }
    return o;
  });

  report(2, "four-eigenvalue regular table rows certify exactly", [] {
    Outcome o;
    for (const auto& e : table2_catalog()) {
      expect_spectrum(o, e.key, e.build(), *e.expected);
      o.require(is_regular(e.build()), e.key + ": not regular");
    }
    o.notes.push_back(std::to_string(table2_catalog().size()) + " rows");
    if (o.ok) o.notes.clear();
    return o;
  });

  report(3, "blow-up and complement characteristic polynomial identities", [] {
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    std::size_t exact_compared = 0;
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = order(rng);
      const Graph g = random_graph(rng, n, 0.5);
      const Polynomial p = char_poly(g);
      for (std::size_t m = 1; m <= 3; ++m) {
        const auto M = static_cast<std::int64_t>(m);
        const std::string tag = write_graph6(g) + " m=" + std::to_string(m);
        const Polynomial tensor_want = x_pow(n * (m - 1)) * p.scale_roots(M);
        o.require(char_poly(tensor_j(g, m)) == tensor_want, tag + ": tensor polynomial");
        const Polynomial star_want = Polynomial::linear_factor(-1).pow(n * (m - 1)) * p.scale_roots(M).compose_linear(1, -(M - 1));
        o.require(char_poly(star_j(g, m)) == star_want, tag + ": star polynomial");
        // integral graphs: compare certified spectra value by value too
        const auto s = certified_spectrum(g);
        if (s && s->is_integral()) {
          std::vector<SpectrumEntry> t, st;
          for (const auto& e : s->entries()) {
            t.push_back({ExactEigenvalue::integer(M * e.value.value()), e.multiplicity});
            st.push_back({ExactEigenvalue::integer(M * e.value.value() + M - 1), e.multiplicity});
          }
          if (m > 1) {
            t.push_back({ExactEigenvalue::integer(0), n * (m - 1)});
            st.push_back({ExactEigenvalue::integer(-1), n * (m - 1)});
          }
          const auto ts = certified_spectrum(tensor_j(g, m)), ss = certified_spectrum(star_j(g, m));
          o.require(ts && *ts == ExactSpectrum(t), tag + ": tensor spectrum");
          o.require(ss && *ss == ExactSpectrum(st), tag + ": star spectrum");
          exact_compared += 2;
        }
      }
    }
    std::vector<Graph> regular;
    std::uniform_int_distribution<std::size_t> jump(1, 4);
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = 3 + i % 6;
      std::vector<std::size_t> jumps;
      for (int k = 0; k < 1 + i % 3; ++k) jumps.push_back(jump(rng) % (n / 2 + 1));
      regular.push_back(circulant(n, jumps));
    }
    for (const char* key : {"shrikhande", "petersen", "Q3", "LK6", "table2/H33"}) regular.push_back(catalog_graph(key));
    for (const Graph& g : regular) {
      if (!is_regular(g)) continue;
      const auto n = static_cast<std::int64_t>(g.order());
      const auto r = static_cast<std::int64_t>(g.degree(0));
      const Polynomial lhs = char_poly(complement(g)) * Polynomial::linear_factor(-(r + 1));
      const Polynomial rhs = Polynomial::constant(n % 2 ? -1 : 1) * Polynomial::linear_factor(n - 1 - r) * char_poly(g).compose_linear(-1, -1);
      o.require(lhs == rhs, write_graph6(g) + ": complement polynomial");
    }
    if (exact_compared == 0) o.require(false, "no integral sample graphs for the spectrum comparison");
    return o;
  });

  report(4, "connected graphs n = 2..7: every check passes, single-threaded", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    connected_sweep = sweep(2, 7, true, 1, check_ids());
    connected_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::map<std::size_t, std::size_t> want = {{2, 1}, {3, 4}, {4, 38}, {5, 728}, {6, 26704}, {7, 1866256}};
    o.require(connected_sweep.per_order == want, "connected labeled counts differ from 1, 4, 38, 728, 26704, 1866256");
    list_failures(o, connected_sweep, check_ids());
    o.require(connected_sweep.skips.empty(), "skipped records");
    o.require(connected_sweep.h_members.empty(), "irregular graphs with equal non-index absolute values below order 8");
    o.require(connected_seconds < 600, "sweep took longer than 10 minutes");
    if (o.ok) {
      o.notes.push_back(std::to_string(connected_sweep.graphs_scanned) + " graphs, " + std::to_string(connected_sweep.g_members.size()) + " class members");
      note_counts(o, connected_sweep);
    }
    return o;
  });

  report(5, "all labeled graphs n <= 6: disconnected decomposition", [] {
    Outcome o;
    small_all_sweep = sweep(2, 6, false, 0, check_ids());
    o.require(small_all_sweep.graphs_scanned == 2 + 8 + 64 + 1024 + 32768, "labeled count");
    list_failures(o, small_all_sweep, {"disconnected-case"});
    const auto& counts = small_all_sweep.verdict_counts["disconnected-case"];
    o.require(counts.count("pass") && counts.at("pass") > 0, "no disconnected graph reached a verdict");
    if (o.ok) {
      std::string line = "disconnected-case:";
      for (const auto& [status, c] : counts) line += " " + status + "=" + std::to_string(c);
      o.notes.push_back(line);
    }
    return o;
  });

  report(6, "energy between both bounds and below (n/2)(1+sqrt n), all graphs n <= 7", [] {
    Outcome o;
    order7_all_sweep = sweep(7, 7, false, 0, {"energy-bounds", "energy-equalities", "numeric-agreement", "integrality", "disconnected-case"});
    o.require(order7_all_sweep.graphs_scanned == (std::size_t{1} << 21), "labeled count at n = 7");
    for (const SurveySummary* s : {&connected_sweep, &small_all_sweep, &order7_all_sweep}) {
      list_failures(o, *s, {"energy-bounds", "energy-equalities"});
      o.require(failures_for(*s, "energy-bounds") == 0, "energy bound violations");
    }
    if (o.ok) {
      const auto& c = order7_all_sweep.verdict_counts["energy-bounds"];
      o.notes.push_back(std::to_string(c.count("pass") ? c.at("pass") : 0) + " graphs with an edge checked at n = 7");
    }
    return o;
  });

  report(7, "float and exact spectra agree within 1e-8; singular values agree across routes", [] {
    Outcome o;
    for (const SurveySummary* s : {&connected_sweep, &small_all_sweep, &order7_all_sweep}) list_failures(o, *s, {"numeric-agreement"});
    for (const auto& e : catalog()) {
      const Verdict v = check_numeric_agreement(analyze(e.build()));
      o.require(v.passed(), e.key + ": " + v.detail);
    }
    std::mt19937 rng(99);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 1 + i % 20;
      const Graph g = random_graph(rng, n, 0.1 + 0.8 * (i % 7) / 6.0);
      const auto via_eigen = singular_values(g);
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (const auto& ed : g.edges()) a(ed.u, ed.v) = a(ed.v, ed.u) = 1;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(a.transpose() * a, Eigen::EigenvaluesOnly);
      std::vector<double> via_gram;
      for (Eigen::Index k = 0; k < gram.eigenvalues().size(); ++k) {
        const double mu = gram.eigenvalues()(k);
        via_gram.push_back(mu < 1e-9 ? 0.0 : std::sqrt(mu));
      }
      std::sort(via_gram.begin(), via_gram.end(), std::greater<>());
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(via_eigen[k] - via_gram[k]));
    }
    o.require(worst <= 1e-8, "singular value routes differ by " + std::to_string(worst));
    if (o.ok) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "worst singular value gap %.2e", worst);
      o.notes.push_back(buf);
    }
    return o;
  });

  report(8, "class members are integral except nonsquare complete bipartite parts", [] {
    Outcome o;
    std::size_t exceptions = 0, members = 0;
    for (const SurveySummary* s : {&connected_sweep, &small_all_sweep, &order7_all_sweep}) {
      list_failures(o, *s, {"integrality"});
      const auto it = s->verdict_counts.find("integrality");
      if (it == s->verdict_counts.end()) continue;
      members += it->second.count("pass") ? it->second.at("pass") : 0;
    }
    for (const auto& m : connected_sweep.g_members)
      if (m.spectrum.find("sqrt") != std::string::npos) ++exceptions;
    o.require(members > 0, "no members checked");
    if (o.ok) o.notes.push_back(std::to_string(members) + " member checks, " + std::to_string(exceptions) + " connected irrational members (all K_{p,q})");
    return o;
  });

  report(9, "graph6 round-trip and malformed-input fuzz", [] {
    Outcome o;
    std::size_t round_trips = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for (const Graph& g : enumerate_labeled(n, true)) {
        const std::string s = write_graph6(g);
        const Graph back = parse_graph6(s);
        o.require(back == g && write_graph6(back) == s, "round trip " + s);
        ++round_trips;
      }
    o.require(round_trips == 1 + 4 + 38 + 728 + 26704, "connected count n <= 6");
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> byte(0, 255), printable(63, 126), len(0, 24), kind(0, 3);
    std::size_t structured = 0, valid = 0;
    // keep drawing until 10^5 inputs have been rejected; accepted ones must round-trip
    while (structured < 100000) {
      std::string s;
      switch (kind(rng)) {
        case 0:  // arbitrary bytes
          s.resize(static_cast<std::size_t>(len(rng)));
          for (auto& c : s) c = static_cast<char>(byte(rng));
          break;
        case 1: {  // valid encoding, truncated
          s = write_graph6(random_graph(rng, 2 + static_cast<std::size_t>(len(rng)), 0.5));
          s.resize(s.size() - 1 - static_cast<std::size_t>(len(rng)) % (s.size() - 1));
          if (s.size() > 1) s.pop_back();
          break;
        }
        case 2: {  // valid encoding with an extra byte
          s = write_graph6(random_graph(rng, 1 + static_cast<std::size_t>(len(rng)), 0.5));
          s.push_back(static_cast<char>(printable(rng)));
          break;
        }
        default: {  // valid encoding with a corrupted byte
          s = write_graph6(random_graph(rng, 2 + static_cast<std::size_t>(len(rng)), 0.5));
          s[static_cast<std::size_t>(byte(rng)) % s.size()] = static_cast<char>(byte(rng));
          break;
        }
      }
      try {
        const Graph g = parse_graph6(s);
        ++valid;
        o.require(parse_graph6(write_graph6(g)) == g, "accepted input does not round-trip");
      } catch (const ParseError&) {
        ++structured;
      } catch (const CapacityError&) {
        ++structured;
      } catch (const std::exception& e) {
        o.require(false, std::string("unstructured exception: ") + e.what());
      }
    }
    o.notes.push_back(std::to_string(round_trips) + " round trips; fuzz: " + std::to_string(structured) + " malformed inputs rejected with structured errors, " +
                      std::to_string(valid) + " well-formed draws round-tripped");
    return o;
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
