#ifndef SPECTRAL_SURD_HPP
#define SPECTRAL_SURD_HPP

// Exact real numbers of the form  sum_i q_i * sqrt(d_i)  with rational q_i and
// distinct squarefree d_i >= 1. Closed under +, -, *, and division by a single
// term; signs are decided exactly by eliminating one prime at a time.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "spectral/exact.hpp"

namespace spectral {

namespace detail {

inline std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace detail

class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(std::int64_t v) { add_term(1, Rational(v)); }  // NOLINT(google-explicit-constructor)
  explicit SurdSum(const Rational& q) { add_term(1, q); }

  /// sqrt(v) for v >= 0, with square factors pulled out.
  static SurdSum sqrt_of(std::int64_t v) {
    if (v < 0) throw InvalidArgument("square root of a negative integer");
    SurdSum s;
    if (v == 0) return s;
    std::int64_t outside = 1, inside = 1;
    for (std::int64_t p = 2; p * p <= v; ++p) {
      while (v % (p * p) == 0) {
        v /= p * p;
        outside *= p;
      }
      if (v % p == 0) {
        v /= p;
        inside *= p;
      }
    }
    inside *= v;
    s.add_term(inside, Rational(outside));
    return s;
  }

  /// Terms keyed by squarefree radicand (1 is the rational part).
  const std::map<std::int64_t, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

  double to_double() const {
    double acc = 0;
    for (const auto& [d, q] : terms_) acc += static_cast<double>(q) * std::sqrt(static_cast<double>(d));
    return acc;
  }

  SurdSum operator-() const {
    SurdSum r = *this;
    for (auto& [d, q] : r.terms_) q = -q;
    return r;
  }

  friend SurdSum operator+(SurdSum a, const SurdSum& b) {
    for (const auto& [d, q] : b.terms_) a.add_term(d, q);
    return a;
  }
  friend SurdSum operator-(const SurdSum& a, const SurdSum& b) { return a + (-b); }

  friend SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum r;
    for (const auto& [da, qa] : a.terms_)
      for (const auto& [db, qb] : b.terms_) {
        const std::int64_t g = std::gcd(da, db);
        r.add_term((da / g) * (db / g), qa * qb * Rational(g));
      }
    return r;
  }

  /// Division by a nonzero single-term value q*sqrt(d).
  friend SurdSum operator/(const SurdSum& a, const SurdSum& b) {
    if (b.terms_.size() != 1) throw InvalidArgument("SurdSum division needs a single-term divisor");
    const auto& [d, q] = *b.terms_.begin();
    SurdSum inv;
    inv.add_term(d, Rational(1) / (q * Rational(d)));
    return a * inv;
  }

  SurdSum& operator+=(const SurdSum& b) { return *this = *this + b; }

  /// Exact sign: -1, 0 or +1.
  int sign() const { return sign_of(*this); }

  friend bool operator==(const SurdSum& a, const SurdSum& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const SurdSum& a, const SurdSum& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const SurdSum& a, const SurdSum& b) { return (a - b).sign() <= 0; }

  /// "6", "2*sqrt(6)", "3/2 + sqrt(5)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, q] : terms_) {
      const bool neg = q < 0;
      const Rational mag = neg ? Rational(-q) : q;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (d == 1) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += "sqrt(" + std::to_string(d) + ")";
      }
    }
    return out;
  }

 private:
  void add_term(std::int64_t d, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(d, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Write s = u + v*sqrt(p) for the largest prime p present; then
  // sign(s) follows from sign(u), sign(v) and sign(u^2 - p v^2), none of
  // which involve p.
  static int sign_of(const SurdSum& s) {
    if (s.terms_.empty()) return 0;
    if (s.terms_.size() == 1) return s.terms_.begin()->second < 0 ? -1 : 1;
    std::int64_t p = 1;
    for (const auto& [d, q] : s.terms_)
      for (auto f : detail::prime_factors(d)) p = std::max(p, f);
    SurdSum u, v;
    for (const auto& [d, q] : s.terms_) {
      if (d % p == 0)
        v.add_term(d / p, q);
      else
        u.add_term(d, q);
    }
    const int su = sign_of(u), sv = sign_of(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    const int t = sign_of(u * u - v * v * SurdSum(static_cast<std::int64_t>(p)));
    return t > 0 ? su : (t < 0 ? sv : 0);
  }

  std::map<std::int64_t, Rational> terms_;
};

}  // namespace spectral

#endif  // SPECTRAL_SURD_HPP
