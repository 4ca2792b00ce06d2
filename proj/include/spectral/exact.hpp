#ifndef SPECTRAL_EXACT_HPP
#define SPECTRAL_EXACT_HPP

// Exact integer linear algebra. Bareiss fraction-free elimination runs on
// int64 entries with 128-bit intermediates and restarts on big integers the
// moment any intermediate minor leaves the int64 range.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spectral/errors.hpp"

namespace spectral {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense row-major integer matrix with small entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InvalidArgument("matrix data does not match its dimensions");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<std::int64_t>& data() const noexcept { return data_; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Product; throws CapacityError if an entry overflows int64.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix dimensions do not agree");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::int64_t aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(aik, b(k, j), &prod) || __builtin_add_overflow(c(i, j), prod, &c(i, j)))
            throw CapacityError("integer matrix product overflows int64");
        }
      }
    return c;
  }

  /// this - s*I
  IntMatrix shifted(std::int64_t s) const {
    IntMatrix m = *this;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) m(i, i) -= s;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

namespace detail {

struct Overflow {};

__extension__ using Int128 = __int128;

inline std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p) {
  const Int128 num = static_cast<Int128>(a) * b - static_cast<Int128>(c) * d;
  const Int128 q = num / p;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return static_cast<std::int64_t>(q);
}

inline Integer bareiss_step(const Integer& a, const Integer& b, const Integer& c, const Integer& d, const Integer& p) {
  Integer num = a * b - c * d;
  return num / p;  // exact by Sylvester's identity
}

/// Fraction-free elimination in place. Returns the rank; `det` receives the
/// determinant when the matrix is square.
template <class T>
std::size_t bareiss(std::vector<T>& a, std::size_t rows, std::size_t cols, T* det) {
  T prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
      sign = -sign;
    }
    const T piv = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i * cols + j] = bareiss_step(a[i * cols + j], piv, lead, a[rank * cols + j], prev);
      a[i * cols + c] = 0;
    }
    prev = piv;
    ++rank;
  }
  if (det) {
    if (rows != cols || rank < rows)
      *det = 0;
    else
      *det = sign > 0 ? prev : T(-prev);
  }
  return rank;
}

}  // namespace detail

/// Exact rank.
inline std::size_t exact_rank(const IntMatrix& m) {
  try {
    auto a = m.data();
    return detail::bareiss<std::int64_t>(a, m.rows(), m.cols(), nullptr);
  } catch (const detail::Overflow&) {
    std::vector<Integer> a(m.data().begin(), m.data().end());
    return detail::bareiss<Integer>(a, m.rows(), m.cols(), nullptr);
  }
}

/// Exact determinant of a square matrix.
inline Integer exact_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant needs a square matrix");
  if (m.rows() == 0) return 1;
  try {
    auto a = m.data();
    std::int64_t det = 0;
    detail::bareiss<std::int64_t>(a, m.rows(), m.cols(), &det);
    return det;
  } catch (const detail::Overflow&) {
    std::vector<Integer> a(m.data().begin(), m.data().end());
    Integer det = 0;
    detail::bareiss<Integer>(a, m.rows(), m.cols(), &det);
    return det;
  }
}

inline std::size_t exact_nullity(const IntMatrix& m) { return m.cols() - exact_rank(m); }

/// Integer square root; returns the floor.
inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw InvalidArgument("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline bool is_perfect_square(std::int64_t v) {
  if (v < 0) return false;
  const auto r = isqrt(v);
  return r * r == v;
}

// ---------------------------------------------------------------------------

/// Polynomial with big-integer coefficients, stored low degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial constant(Integer v) { return Polynomial({std::move(v)}); }
  static Polynomial x() { return Polynomial({0, 1}); }
  /// x - root
  static Polynomial linear_factor(const Integer& root) { return Polynomial({-root, 1}); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Coefficient of x^k (zero past the degree).
  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  Integer evaluate(const Integer& at) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial pow(std::size_t e) const {
    Polynomial r = constant(1);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// p(a*x + b)
  Polynomial compose_linear(const Integer& a, const Integer& b) const {
    const Polynomial inner({b, a});
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
    return r;
  }

  /// Scales the coefficient of x^k by s^k, i.e. s^deg * p(x / s) when p is monic of that degree.
  Polynomial scale_roots(const Integer& s) const {
    std::vector<Integer> r = c_;
    const std::size_t d = c_.size() - 1;
    Integer pw = 1;
    for (std::size_t k = 0; k <= d; ++k) {
      r[d - k] *= pw;
      pw *= s;
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, highest degree first: "x^3 - 2x".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Integer& co = c_[k];
      if (co == 0) continue;
      const bool neg = co < 0;
      const Integer mag = neg ? Integer(-co) : co;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (mag != 1 || k == 0) out += mag.str();
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// Interpolates the unique polynomial of degree <= points.size()-1 through
/// (points[i], values[i]) with Newton divided differences; the result must
/// have integer coefficients.
inline Polynomial interpolate_integer(const std::vector<Integer>& points, const std::vector<Integer>& values) {
  const std::size_t k = points.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i] - points[i - level]);
      if (i == level) break;
    }
  // Horner expansion of the Newton form with rational coefficients.
  std::vector<Rational> poly{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(points[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<Integer> out;
  out.reserve(poly.size());
  for (const auto& r : poly) {
    if (denominator(r) != 1) throw CertificationError("interpolated polynomial has a non-integer coefficient");
    out.push_back(numerator(r));
  }
  return Polynomial(std::move(out));
}

}  // namespace spectral

#endif  // SPECTRAL_EXACT_HPP
