#ifndef SPECTRAL_SPECTRA_HPP
#define SPECTRAL_SPECTRA_HPP

// Floating-point spectra (cyclic Jacobi) and exact spectra certified with
// integer elimination. An exact spectrum holds integers and at most one
// conjugate surd pair +-sqrt(d); anything else stays floating-point.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/exact.hpp"
#include "spectral/graph.hpp"
#include "spectral/surd.hpp"

namespace spectral {

inline constexpr double kDefaultClusterTolerance = 1e-7;
inline constexpr double kIntegerGate = 1e-6;

/// An integer, or sign * sqrt(radicand) with a non-square radicand.
class ExactEigenvalue {
 public:
  ExactEigenvalue() = default;

  static ExactEigenvalue integer(std::int64_t v) {
    ExactEigenvalue e;
    e.value_ = v;
    return e;
  }

  /// sign * sqrt(radicand); collapses to an integer when radicand is a square.
  static ExactEigenvalue surd(int sign, std::int64_t radicand) {
    if (radicand < 0) throw InvalidArgument("negative radicand");
    if (sign != 1 && sign != -1) throw InvalidArgument("surd sign must be +1 or -1");
    if (is_perfect_square(radicand)) return integer(sign * isqrt(radicand));
    ExactEigenvalue e;
    e.is_surd_ = true;
    e.value_ = sign;
    e.radicand_ = radicand;
    return e;
  }

  bool is_integer() const noexcept { return !is_surd_; }
  bool is_surd() const noexcept { return is_surd_; }
  /// The integer value; for a surd, its sign.
  std::int64_t value() const noexcept { return value_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  int sign() const noexcept { return value_ > 0 ? 1 : (value_ < 0 ? -1 : 0); }

  /// The square of the value (always an integer).
  std::int64_t square() const noexcept { return is_surd_ ? radicand_ : value_ * value_; }
  /// x * |x|, strictly increasing in x; used for exact ordering.
  std::int64_t signed_square() const noexcept { return is_surd_ ? value_ * radicand_ : value_ * (value_ < 0 ? -value_ : value_); }

  ExactEigenvalue negated() const {
    ExactEigenvalue e = *this;
    e.value_ = -e.value_;
    return e;
  }

  SurdSum as_surd_sum() const {
    return is_surd_ ? SurdSum::sqrt_of(radicand_) * SurdSum(value_) : SurdSum(value_);
  }
  SurdSum abs_value() const { return is_surd_ ? SurdSum::sqrt_of(radicand_) : SurdSum(value_ < 0 ? -value_ : value_); }

  double to_double() const {
    return is_surd_ ? static_cast<double>(value_) * std::sqrt(static_cast<double>(radicand_)) : static_cast<double>(value_);
  }

  /// "6", "-2", "sqrt(6)", "-sqrt(6)".
  std::string to_string() const {
    if (!is_surd_) return std::to_string(value_);
    return std::string(value_ < 0 ? "-" : "") + "sqrt(" + std::to_string(radicand_) + ")";
  }

  friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;
  friend std::strong_ordering operator<=>(const ExactEigenvalue& a, const ExactEigenvalue& b) {
    return a.signed_square() <=> b.signed_square();
  }

 private:
  bool is_surd_ = false;
  std::int64_t value_ = 0;
  std::int64_t radicand_ = 0;
};

struct SpectrumEntry {
  ExactEigenvalue value;
  std::size_t multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of exact eigenvalues, descending, equal values merged.
class ExactSpectrum {
 public:
  ExactSpectrum() = default;

  explicit ExactSpectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) { normalize(); }

  /// Integer spectrum from (value, multiplicity) pairs: {{6,1},{2,6},{-2,9}}.
  ExactSpectrum(std::initializer_list<std::pair<std::int64_t, std::size_t>> pairs) {
    for (const auto& [v, k] : pairs) entries_.push_back({ExactEigenvalue::integer(v), k});
    normalize();
  }

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::size_t order() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
  }
  std::size_t distinct_count() const noexcept { return entries_.size(); }
  bool certified() const noexcept { return certified_; }
  bool empty() const noexcept { return entries_.empty(); }

  const ExactEigenvalue& index() const {
    if (entries_.empty()) throw InvalidArgument("empty spectrum has no index");
    return entries_.front().value;
  }

  std::size_t multiplicity(const ExactEigenvalue& v) const {
    for (const auto& e : entries_)
      if (e.value == v) return e.multiplicity;
    return 0;
  }
  std::size_t multiplicity(std::int64_t v) const { return multiplicity(ExactEigenvalue::integer(v)); }

  bool is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const SpectrumEntry& e) { return e.value.is_integer(); });
  }

  /// Sum of eigenvalues; zero for any adjacency spectrum.
  SurdSum trace() const {
    SurdSum s;
    for (const auto& e : entries_) s += e.value.as_surd_sum() * SurdSum(static_cast<std::int64_t>(e.multiplicity));
    return s;
  }

  /// Sum of squared eigenvalues; 2m for an adjacency spectrum.
  Integer sum_of_squares() const {
    Integer s = 0;
    for (const auto& e : entries_) s += Integer(e.value.square()) * e.multiplicity;
    return s;
  }

  /// Sum of absolute values.
  SurdSum energy() const {
    SurdSum s;
    for (const auto& e : entries_) s += e.value.abs_value() * SurdSum(static_cast<std::int64_t>(e.multiplicity));
    return s;
  }

  /// Eigenvalues repeated by multiplicity, descending.
  std::vector<double> to_doubles() const {
    std::vector<double> out;
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value.to_double());
    return out;
  }

  /// prod (x - lambda)^k, with each surd pair contributing (x^2 - d)^k.
  Polynomial char_poly() const {
    Polynomial p = Polynomial::constant(1);
    for (const auto& e : entries_) {
      if (e.value.is_integer()) {
        p = p * Polynomial::linear_factor(e.value.value()).pow(e.multiplicity);
      } else if (e.value.sign() > 0) {
        if (multiplicity(e.value.negated()) != e.multiplicity)
          throw InvalidArgument("surd " + e.value.to_string() + " without a conjugate of equal multiplicity");
        p = p * Polynomial({Integer(-e.value.radicand()), 0, 1}).pow(e.multiplicity);
      }
    }
    return p;
  }

  ExactSpectrum with_certified(bool c) const {
    ExactSpectrum s = *this;
    s.certified_ = c;
    return s;
  }

  /// "6^1 2^6 -2^9"
  std::string to_string() const {
    std::string out;
    for (const auto& e : entries_) {
      if (!out.empty()) out += ' ';
      out += e.value.to_string() + "^" + std::to_string(e.multiplicity);
    }
    return out;
  }

  /// Parses the to_string form; a missing "^k" means multiplicity 1.
  static ExactSpectrum parse(std::string_view text);

  /// Equality of the multisets (certification status ignored).
  friend bool operator==(const ExactSpectrum& a, const ExactSpectrum& b) { return a.entries_ == b.entries_; }

 private:
  void normalize() {
    std::sort(entries_.begin(), entries_.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
    std::vector<SpectrumEntry> merged;
    for (const auto& e : entries_) {
      if (e.multiplicity == 0) continue;
      if (!merged.empty() && merged.back().value == e.value)
        merged.back().multiplicity += e.multiplicity;
      else
        merged.push_back(e);
    }
    entries_ = std::move(merged);
  }

  std::vector<SpectrumEntry> entries_;
  bool certified_ = false;
};

inline ExactSpectrum ExactSpectrum::parse(std::string_view text) {
  std::vector<SpectrumEntry> entries;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](std::int64_t& out) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected a number", start);
    if (i - start > 15) throw ParseError("number too large", start);
    out = std::stoll(std::string(text.substr(start, i - start)));
  };
  skip_space();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '-' || text[i] == '+') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    ExactEigenvalue v;
    if (text.substr(i, 5) == "sqrt(") {
      i += 5;
      std::int64_t d = 0;
      read_int(d);
      if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
      ++i;
      v = ExactEigenvalue::surd(sign, d);
    } else {
      std::int64_t a = 0;
      read_int(a);
      v = ExactEigenvalue::integer(sign * a);
    }
    std::int64_t k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      read_int(k);
    }
    entries.push_back({v, static_cast<std::size_t>(k)});
    const std::size_t before = i;
    skip_space();
    if (i < text.size() && i == before) throw ParseError("expected whitespace between entries", i);
  }
  return ExactSpectrum(std::move(entries));
}

// ---------------------------------------------------------------------------
// Floating point.

struct Cluster {
  double center = 0;  // mean of the members
  double lo = 0, hi = 0;
  std::size_t multiplicity = 0;
};

/// Eigenvalues, descending, with the tolerance used to group them.
class FloatSpectrum {
 public:
  FloatSpectrum() = default;
  FloatSpectrum(std::vector<double> values, double cluster_tolerance) : values_(std::move(values)), tol_(cluster_tolerance) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
  }

  const std::vector<double>& values() const noexcept { return values_; }
  double cluster_tolerance() const noexcept { return tol_; }
  std::size_t order() const noexcept { return values_.size(); }

  /// Groups of diameter <= tolerance: a new group starts whenever a value is
  /// more than the tolerance below the first member of the current group.
  std::vector<Cluster> clusters() const {
    std::vector<Cluster> out;
    for (double v : values_) {
      if (out.empty() || out.back().hi - v > tol_) out.push_back({v, v, v, 0});
      auto& c = out.back();
      c.center = (c.center * static_cast<double>(c.multiplicity) + v) / static_cast<double>(c.multiplicity + 1);
      c.lo = v;
      ++c.multiplicity;
    }
    return out;
  }

 private:
  std::vector<double> values_;
  double tol_ = kDefaultClusterTolerance;
};

namespace detail {

inline constexpr int kJacobiSweepBudget = 100;

/// Cyclic Jacobi on a dense symmetric row-major matrix. Eigenvalues end up
/// on the diagonal of `a`; if `v` is non-null it receives the eigenvectors
/// as columns (row-major n x n).
inline void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* v) {
  if (v) {
    v->assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) (*v)[i * n + i] = 1.0;
  }
  double scale = 0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0 || n < 2) return;
  const double threshold = 1e-13 * scale;
  for (int sweep = 0; sweep < kJacobiSweepBudget; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
    if (off < threshold) return;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = (aqq - app) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0;
        if (v)
          for (std::size_t k = 0; k < n; ++k) {
            double& vkp = (*v)[k * n + p];
            double& vkq = (*v)[k * n + q];
            const double x = vkp, y = vkq;
            vkp = c * x - s * y;
            vkq = s * x + c * y;
          }
      }
  }
  throw NumericError("Jacobi eigensolver did not converge within " + std::to_string(kJacobiSweepBudget) + " sweeps");
}

inline std::vector<double> to_dense(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.neighbors(u)) a[u * n + v] = 1.0;
  return a;
}

/// Eigenpairs of a symmetric matrix: values and eigenvectors (columns).
struct EigenSystem {
  std::vector<double> values;
  std::vector<double> vectors;
};

inline EigenSystem eigensystem(const Graph& g) {
  const std::size_t n = g.order();
  EigenSystem es;
  auto a = to_dense(g);
  jacobi(a, n, &es.vectors);
  es.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) es.values[i] = a[i * n + i];
  return es;
}

}  // namespace detail

/// Adjacency eigenvalues by cyclic Jacobi, sorted descending.
inline FloatSpectrum float_spectrum(const Graph& g, double cluster_tolerance = kDefaultClusterTolerance) {
  if (!(cluster_tolerance > 0)) throw InvalidArgument("cluster tolerance must be positive");
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("spectrum of the null graph");
  auto a = detail::to_dense(g);
  detail::jacobi(a, n, nullptr);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  return FloatSpectrum(std::move(values), cluster_tolerance);
}

// ---------------------------------------------------------------------------
// Exact.

inline IntMatrix adjacency_int_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : g.neighbors(u)) m(u, v) = 1;
  return m;
}

/// Exact multiplicity of the integer e as an eigenvalue: nullity of A - eI.
inline std::size_t certify_integer_eigenvalue(const Graph& g, std::int64_t e) {
  return exact_nullity(adjacency_int_matrix(g).shifted(e));
}

/// Confirms every entry of `candidate` against `g` with exact arithmetic.
/// Integers are checked by nullity; a surd pair +-sqrt(d) of multiplicity k
/// each is checked by nullity(A^2 - dI) = 2k (conjugate roots of an integer
/// polynomial have equal multiplicity). Since the confirmed multiplicities
/// sum to n, the spectrum is complete.
inline ExactSpectrum certify_spectrum(const Graph& g, const ExactSpectrum& candidate) {
  const std::size_t n = g.order();
  if (candidate.order() != n)
    throw CertificationError("candidate has " + std::to_string(candidate.order()) + " eigenvalues for a graph of order " +
                             std::to_string(n));
  const IntMatrix a = adjacency_int_matrix(g);
  std::optional<std::int64_t> radicand;
  for (const auto& e : candidate.entries()) {
    if (e.value.is_integer()) {
      const std::size_t got = exact_nullity(a.shifted(e.value.value()));
      if (got != e.multiplicity)
        throw CertificationError("eigenvalue " + e.value.to_string() + ": candidate multiplicity " + std::to_string(e.multiplicity) +
                                 ", exact multiplicity " + std::to_string(got));
      continue;
    }
    if (radicand && *radicand != e.value.radicand())
      throw CertificationError("more than one surd pair is not supported (sqrt(" + std::to_string(*radicand) + ") and " +
                               e.value.to_string() + ")");
    radicand = e.value.radicand();
    if (e.value.sign() < 0) continue;
    const std::size_t partner = candidate.multiplicity(e.value.negated());
    if (partner != e.multiplicity)
      throw CertificationError("eigenvalue " + e.value.to_string() + ": conjugate has multiplicity " + std::to_string(partner) +
                               ", expected " + std::to_string(e.multiplicity));
    const std::size_t got = exact_nullity((a * a).shifted(e.value.radicand()));
    if (got != 2 * e.multiplicity)
      throw CertificationError("eigenvalue " + e.value.to_string() + ": candidate multiplicity " + std::to_string(e.multiplicity) +
                               ", exact multiplicity " + std::to_string(got / 2));
  }
  if (radicand && candidate.multiplicity(ExactEigenvalue::surd(-1, *radicand)) == 0)
    throw CertificationError("eigenvalue -sqrt(" + std::to_string(*radicand) + ") missing its conjugate");
  return candidate.with_certified(true);
}

/// Exact spectrum when certification succeeds, alongside the float spectrum.
struct SpectrumResult {
  std::optional<ExactSpectrum> exact;
  FloatSpectrum floating;

  bool certified() const noexcept { return exact.has_value(); }
};

/// Rounds float clusters to an integer or single-surd-pair candidate and
/// certifies it; returns only the float spectrum when no candidate fits.
inline SpectrumResult exact_spectrum(const Graph& g, double cluster_tolerance = kDefaultClusterTolerance) {
  SpectrumResult out{std::nullopt, float_spectrum(g, cluster_tolerance)};
  std::vector<SpectrumEntry> candidate;
  std::vector<Cluster> irrational;
  for (const auto& c : out.floating.clusters()) {
    const double r = std::round(c.center);
    if (std::abs(c.center - r) <= kIntegerGate)
      candidate.push_back({ExactEigenvalue::integer(static_cast<std::int64_t>(r)), c.multiplicity});
    else
      irrational.push_back(c);
  }
  if (irrational.size() == 2) {
    const Cluster& hi = irrational[0];
    const Cluster& lo = irrational[1];
    const double d = hi.center * hi.center;
    const double dr = std::round(d);
    if (hi.center > 0 && hi.multiplicity == lo.multiplicity && std::abs(hi.center + lo.center) <= kIntegerGate &&
        std::abs(d - dr) <= kIntegerGate * std::max(1.0, hi.center)) {
      const auto radicand = static_cast<std::int64_t>(dr);
      if (!is_perfect_square(radicand)) {
        candidate.push_back({ExactEigenvalue::surd(1, radicand), hi.multiplicity});
        candidate.push_back({ExactEigenvalue::surd(-1, radicand), lo.multiplicity});
        irrational.clear();
      }
    }
  }
  if (!irrational.empty()) return out;
  out.exact = certify_spectrum(g, ExactSpectrum(std::move(candidate)));
  return out;
}

/// det(xI - A), interpolated from exact determinants at x = 0..n.
inline Polynomial char_poly(const Graph& g) {
  const std::size_t n = g.order();
  const IntMatrix a = adjacency_int_matrix(g);
  std::vector<Integer> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? static_cast<std::int64_t>(k) : 0) - a(i, j);
    xs.emplace_back(static_cast<std::int64_t>(k));
    ys.push_back(exact_determinant(m));
  }
  return interpolate_integer(xs, ys);
}

/// x^(n-r) * [prod (x + p_i) - sum_i p_i prod_{j != i} (x + p_j)] for K_{p_1,...,p_r}.
inline Polynomial multipartite_char_poly(std::span<const std::size_t> parts) {
  if (parts.empty()) throw InvalidArgument("complete multipartite graph needs at least one part");
  std::size_t n = 0;
  for (auto p : parts) {
    if (p == 0) throw InvalidArgument("part sizes must be positive");
    n += p;
  }
  Polynomial full = Polynomial::constant(1);
  for (auto p : parts) full = full * Polynomial::linear_factor(-Integer(p));
  Polynomial sum;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Polynomial term = Polynomial::constant(Integer(parts[i]));
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) term = term * Polynomial::linear_factor(-Integer(parts[j]));
    sum = sum + term;
  }
  return Polynomial::x().pow(n - parts.size()) * (full - sum);
}

inline Polynomial multipartite_char_poly(std::initializer_list<std::size_t> parts) {
  return multipartite_char_poly(std::span<const std::size_t>(parts.begin(), parts.size()));
}

/// Interlacing of the r-1 negative eigenvalues of K_{p_1<=...<=p_r} with the
/// part sizes: p_1 <= -l_{n-r+2} <= p_2 <= ... <= -l_n <= p_r. `negatives`
/// are ordered by increasing absolute value.
inline bool esser_interlacing_check(std::span<const std::size_t> parts, std::span<const double> negatives, double tolerance = 1e-9) {
  if (parts.empty()) throw InvalidArgument("empty part list");
  if (negatives.size() + 1 != parts.size())
    throw InvalidArgument("expected " + std::to_string(parts.size() - 1) + " negative eigenvalues, got " + std::to_string(negatives.size()));
  std::vector<std::size_t> p(parts.begin(), parts.end());
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    const double x = -negatives[i];
    if (x < static_cast<double>(p[i]) - tolerance || x > static_cast<double>(p[i + 1]) + tolerance) return false;
  }
  return true;
}

/// Number of distinct eigenvalues, exactly: the degree of the minimal
/// polynomial, found as the first k with A^k in the span of I, A, ..., A^(k-1).
inline std::size_t exact_distinct_eigenvalue_count(const Graph& g) {
  const std::size_t n = g.order();
  const IntMatrix a = adjacency_int_matrix(g);
  std::vector<std::int64_t> rows;
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    rows.insert(rows.end(), power.data().begin(), power.data().end());
    if (exact_rank(IntMatrix(k + 1, n * n, rows)) <= k) return k;
    power = power * a;
  }
  return n;
}

/// Exact number of positive eigenvalues: sign changes of the characteristic
/// polynomial's coefficients (exact for real-rooted polynomials).
inline std::size_t exact_positive_eigenvalue_count(const Graph& g) {
  const Polynomial p = char_poly(g);
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace spectral

#endif  // SPECTRAL_SPECTRA_HPP
