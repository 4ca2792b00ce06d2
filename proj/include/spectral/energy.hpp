#ifndef SPECTRAL_ENERGY_HPP
#define SPECTRAL_ENERGY_HPP

// Graph energy (trace norm of A) and three bounds on it:
//   lower:    E >= s1 + (2m - s1^2) / s2          (s1 >= s2 the top singular values)
//   upper:    E <= l1 + sqrt((n-1)(2m - l1^2))    (l1 the index)
//   order:    E <= (n/2)(1 + sqrt(n))
// Values and equality flags are exact when the spectrum is certified and
// compared with a 1e-8 tolerance otherwise.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/graph.hpp"
#include "spectral/spectra.hpp"
#include "spectral/surd.hpp"

namespace spectral {

inline constexpr double kBoundTolerance = 1e-8;

/// A real value with its exact form when one is known.
struct RealValue {
  double approx = 0;
  std::optional<SurdSum> exact;

  std::string to_string() const;
};

/// The energy with the three bounds and their equality flags.
struct BoundReport {
  RealValue energy;
  RealValue sigma1, sigma2;
  std::int64_t sum_sq = 0;  // sum of squared entries of A, i.e. 2m
  RealValue nikiforov_bound;
  RealValue km_bound;
  RealValue km_n_bound;
  bool nikiforov_equal = false;
  bool km_equal = false;
  bool exact = false;  // equality flags decided in exact arithmetic

  std::string qualifier() const { return exact ? "exact" : "approximate"; }
};

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Absolute values of the eigenvalues, descending, exact.
inline std::vector<ExactEigenvalue> exact_singular_values(const ExactSpectrum& s) {
  std::vector<ExactEigenvalue> out;
  for (const auto& e : s.entries()) out.insert(out.end(), e.multiplicity, e.value.sign() < 0 ? e.value.negated() : e.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace detail

inline std::string RealValue::to_string() const { return exact ? exact->to_string() : detail::format_double(approx); }

/// Singular values of A: the absolute eigenvalues, descending.
inline std::vector<double> singular_values(const FloatSpectrum& s) {
  std::vector<double> out;
  for (double v : s.values()) out.push_back(std::abs(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<double> singular_values(const Graph& g) { return singular_values(float_spectrum(g)); }

/// Energy and bounds from a spectrum of a graph with `n` vertices and `m` edges.
inline BoundReport bound_report(const SpectrumResult& spec, std::size_t n, std::size_t m) {
  if (m == 0) throw InvalidArgument("energy bounds need at least one edge");
  BoundReport b;
  b.sum_sq = static_cast<std::int64_t>(2 * m);
  const auto N = static_cast<std::int64_t>(n);
  const SurdSum two_m(b.sum_sq);
  b.km_n_bound.exact = SurdSum(Rational(N, 2)) * (SurdSum(1) + SurdSum::sqrt_of(N));
  b.km_n_bound.approx = b.km_n_bound.exact->to_double();

  if (spec.exact) {
    const ExactSpectrum& s = *spec.exact;
    const auto sv = detail::exact_singular_values(s);
    if (sv.size() < 2 || sv[1].square() == 0) throw InvalidArgument("the lower energy bound needs an adjacency matrix of rank at least 2");
    b.exact = true;
    b.energy.exact = s.energy();
    b.sigma1.exact = sv[0].as_surd_sum();
    b.sigma2.exact = sv[1].as_surd_sum();
    b.nikiforov_bound.exact = *b.sigma1.exact + (two_m - SurdSum(sv[0].square())) / *b.sigma2.exact;
    const ExactEigenvalue& l1 = s.index();
    const std::int64_t rest = b.sum_sq - l1.square();
    if (rest < 0) throw CertificationError("index squared exceeds 2m");
    b.km_bound.exact = l1.as_surd_sum() + SurdSum::sqrt_of((N - 1) * rest);
    for (RealValue* v : {&b.energy, &b.sigma1, &b.sigma2, &b.nikiforov_bound, &b.km_bound}) v->approx = v->exact->to_double();
    b.nikiforov_equal = (*b.energy.exact - *b.nikiforov_bound.exact).sign() == 0;
    b.km_equal = (*b.energy.exact - *b.km_bound.exact).sign() == 0;
    return b;
  }

  const auto sv = singular_values(spec.floating);
  if (sv.size() < 2 || sv[1] <= kBoundTolerance) throw InvalidArgument("the lower energy bound needs an adjacency matrix of rank at least 2");
  double e = 0;
  for (double x : sv) e += x;
  b.energy.approx = e;
  b.sigma1.approx = sv[0];
  b.sigma2.approx = sv[1];
  b.nikiforov_bound.approx = sv[0] + (static_cast<double>(b.sum_sq) - sv[0] * sv[0]) / sv[1];
  const double l1 = spec.floating.values().front();
  const double rest = static_cast<double>(b.sum_sq) - l1 * l1;
  if (rest < -kBoundTolerance) throw CertificationError("index squared exceeds 2m");
  b.km_bound.approx = l1 + std::sqrt(static_cast<double>(N - 1) * std::max(rest, 0.0));
  b.nikiforov_equal = std::abs(b.energy.approx - b.nikiforov_bound.approx) <= kBoundTolerance;
  b.km_equal = std::abs(b.energy.approx - b.km_bound.approx) <= kBoundTolerance;
  return b;
}

inline BoundReport bound_report(const Graph& g) { return bound_report(exact_spectrum(g), g.order(), g.size()); }

/// Sum of absolute eigenvalues.
inline RealValue energy(const Graph& g) {
  const auto spec = exact_spectrum(g);
  RealValue v;
  if (spec.exact) {
    v.exact = spec.exact->energy();
    v.approx = v.exact->to_double();
  } else {
    for (double x : spec.floating.values()) v.approx += std::abs(x);
  }
  return v;
}

struct BoundCheck {
  RealValue bound;
  bool equal = false;
  bool exact = false;
};

/// s1 + (2m - s1^2) / s2, and whether the energy attains it.
inline BoundCheck nikiforov_bound(const Graph& g) {
  const auto b = bound_report(g);
  return {b.nikiforov_bound, b.nikiforov_equal, b.exact};
}

/// l1 + sqrt((n-1)(2m - l1^2)), and whether the energy attains it.
inline BoundCheck km_bound(const Graph& g) {
  const auto b = bound_report(g);
  return {b.km_bound, b.km_equal, b.exact};
}

/// (n/2)(1 + sqrt(n))
inline RealValue km_n_bound(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  RealValue v;
  v.exact = SurdSum(Rational(n, 2)) * (SurdSum(1) + SurdSum::sqrt_of(n));
  v.approx = v.exact->to_double();
  return v;
}

}  // namespace spectral

#endif  // SPECTRAL_ENERGY_HPP
