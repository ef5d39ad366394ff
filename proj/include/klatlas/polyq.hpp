#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klatlas {

/// Exact polynomial in q with integer coefficients and nonnegative exponents.
/// Coefficients are stored densely with the top term nonzero; the zero
/// polynomial has no stored coefficients.  Coefficient magnitudes arising
/// from Kazhdan-Lusztig computations at desk scale (n <= 9) are tiny, so
/// 64-bit integers are exact here.
class PolyQ {
public:
  PolyQ() = default;

  /// Constant polynomial.
  explicit PolyQ(long long c) {
    if (c != 0) c_.push_back(c);
  }

  /// From dense coefficient list c[0] + c[1] q + ...
  static PolyQ from_coeffs(std::vector<long long> c) {
    PolyQ p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  static PolyQ one() { return PolyQ(1); }
  static PolyQ q_power(int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    std::vector<long long> c(static_cast<size_t>(e) + 1, 0);
    c.back() = 1;
    return from_coeffs(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree of the zero polynomial is reported as -1 (the -infinity marker).
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  long long coefficient(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(e)];
  }

  long long eval_at_one() const {
    long long s = 0;
    for (long long c : c_) s += c;
    return s;
  }

  const std::vector<long long>& coeffs() const { return c_; }

  friend PolyQ add(const PolyQ& a, const PolyQ& b) {
    std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return from_coeffs(std::move(c));
  }

  friend PolyQ sub(const PolyQ& a, const PolyQ& b) {
    std::vector<long long> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return from_coeffs(std::move(c));
  }

  /// Multiply by q^k, k >= 0.  A negative shift never occurs in the KL
  /// recursion; rejecting it catches integrality bugs early.
  friend PolyQ shift(const PolyQ& a, int k) {
    if (k < 0) throw std::invalid_argument("shift: negative exponent");
    if (a.is_zero()) return PolyQ();
    std::vector<long long> c(a.c_.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i + static_cast<size_t>(k)] = a.c_[i];
    return from_coeffs(std::move(c));
  }

  friend PolyQ mul(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return from_coeffs(std::move(c));
  }

  friend PolyQ scale(const PolyQ& a, long long s) {
    std::vector<long long> c(a.c_);
    for (auto& x : c) x *= s;
    return from_coeffs(std::move(c));
  }

  bool operator==(const PolyQ& o) const { return c_ == o.c_; }
  bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

  /// Diagnostic only: coefficients weakly increase then weakly decrease over
  /// exponents 0..degree (the strict reading, so 1 + q^3 fails on the
  /// internal zeros).  Never asserted as an invariant of KL polynomials.
  bool is_unimodal_symmetric_prefix() const {
    if (c_.size() <= 1) return true;
    size_t i = 1;
    while (i < c_.size() && c_[i] >= c_[i - 1]) ++i;
    while (i < c_.size() && c_[i] <= c_[i - 1]) ++i;
    return i == c_.size();
  }

  /// Textual form with ascending exponents, e.g. "1 + q + 2*q^3".
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t e = 0; e < c_.size(); ++e) {
      long long c = c_[e];
      if (c == 0) continue;
      if (!s.empty()) s += (c > 0 ? " + " : " - ");
      else if (c < 0) s += "-";
      long long a = c > 0 ? c : -c;
      if (e == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "q";
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

}  // namespace klatlas
