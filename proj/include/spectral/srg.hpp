#ifndef SPECTRAL_SRG_HPP
#define SPECTRAL_SRG_HPP

// Strongly regular graphs: combinatorial detection and the spectrum implied
// by the parameters (n, r, alpha, beta).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/exact.hpp"
#include "spectral/graph.hpp"
#include "spectral/spectra.hpp"

namespace spectral {

struct SrgParams {
  std::size_t n = 0, r = 0, alpha = 0, beta = 0;

  /// r(r - alpha - 1) = (n - r - 1) beta, with 0 < r < n - 1 and alpha < r, beta <= r.
  bool feasible() const {
    if (n < 3 || r == 0 || r + 1 >= n || alpha >= r || beta > r) return false;
    return r * (r - alpha - 1) == (n - r - 1) * beta;
  }

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters when `g` is regular, neither complete nor edgeless, and the
/// number of common neighbours is alpha for every adjacent pair and beta
/// for every non-adjacent pair.
inline std::optional<SrgParams> detect_srg(const Graph& g) {
  const std::size_t n = g.order();
  const auto profile = degree_profile(g);
  if (!profile.is_regular || profile.r == 0 || profile.r + 1 == n) return std::nullopt;
  std::optional<std::size_t> alpha, beta;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::size_t c = g.common_neighbors(u, v);
      auto& slot = g.adjacent(u, v) ? alpha : beta;
      if (!slot)
        slot = c;
      else if (*slot != c)
        return std::nullopt;
    }
  return SrgParams{n, profile.r, *alpha, *beta};
}

/// Restricted eigenvalues (shift +- sqrt(disc)) / 2 with multiplicities, and
/// the exact spectrum when those eigenvalues are integers.
struct SrgSpectrum {
  SrgParams params;
  std::int64_t shift = 0;  // alpha - beta
  std::int64_t disc = 0;   // (alpha - beta)^2 + 4 (r - beta)
  std::size_t m2 = 0, m3 = 0;
  std::optional<ExactSpectrum> exact;

  std::string to_string() const {
    if (exact) return exact->to_string();
    const std::string root = "sqrt(" + std::to_string(disc) + ")";
    return std::to_string(params.r) + "^1 (" + std::to_string(shift) + "+" + root + ")/2^" + std::to_string(m2) + " (" +
           std::to_string(shift) + "-" + root + ")/2^" + std::to_string(m3);
  }
};

/// Spectrum of an srg from its parameters: eigenvalues
/// ((alpha-beta) +- sqrt(D)) / 2, D = (alpha-beta)^2 + 4(r-beta), with
/// multiplicities ((n-1) -+ (2r + (n-1)(alpha-beta)) / sqrt(D)) / 2.
/// Throws InvalidArgument when the parameters are infeasible.
inline SrgSpectrum srg_spectrum(const SrgParams& p) {
  if (!p.feasible()) throw InvalidArgument("infeasible srg parameters " + p.to_string());
  SrgSpectrum s;
  s.params = p;
  const auto n = static_cast<std::int64_t>(p.n), r = static_cast<std::int64_t>(p.r);
  const auto a = static_cast<std::int64_t>(p.alpha), b = static_cast<std::int64_t>(p.beta);
  s.shift = a - b;
  s.disc = s.shift * s.shift + 4 * (r - b);
  const std::int64_t t = 2 * r + (n - 1) * s.shift;
  if (is_perfect_square(s.disc)) {
    const std::int64_t root = isqrt(s.disc);
    if ((s.shift + root) % 2 != 0 || t % root != 0 || ((n - 1) - t / root) % 2 != 0)
      throw InvalidArgument("srg parameters " + p.to_string() + " give non-integral eigenvalues or multiplicities");
    const std::int64_t m2 = ((n - 1) - t / root) / 2, m3 = ((n - 1) + t / root) / 2;
    if (m2 < 0 || m3 < 0) throw InvalidArgument("srg parameters " + p.to_string() + " give negative multiplicities");
    s.m2 = static_cast<std::size_t>(m2);
    s.m3 = static_cast<std::size_t>(m3);
    s.exact = ExactSpectrum({{r, 1}, {(s.shift + root) / 2, s.m2}, {(s.shift - root) / 2, s.m3}});
    return s;
  }
  if (t != 0 || (n - 1) % 2 != 0)
    throw InvalidArgument("srg parameters " + p.to_string() + " give non-integral multiplicities");
  s.m2 = s.m3 = static_cast<std::size_t>((n - 1) / 2);
  return s;
}

}  // namespace spectral

#endif  // SPECTRAL_SRG_HPP
