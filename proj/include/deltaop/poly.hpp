#pragma once

// Truncated polynomials in one variable u over truncated p-adic integers.
// A coefficient that is not stored is an exact zero; stored coefficients
// each carry their own precision.

#include <cstddef>
#include <span>
#include <vector>

#include "deltaop/padic.hpp"

namespace deltaop {

class PadicPoly {
 public:
  PadicPoly() = default;
  explicit PadicPoly(Prime p) : p_(p) {}
  PadicPoly(Prime p, std::vector<PadicInt> coeffs);

  Prime prime() const { return p_; }
  /// Number of stored coefficients (degree bound + 1).
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  const PadicInt& operator[](std::size_t j) const { return coeffs_[j]; }
  PadicInt& operator[](std::size_t j) { return coeffs_[j]; }
  std::span<const PadicInt> coeffs() const { return coeffs_; }
  /// Smallest coefficient precision, or -1 for the empty polynomial.
  int min_precision() const;

  /// Drop every coefficient above degree `cap`.
  PadicPoly truncated(std::size_t cap) const;

  friend bool operator==(const PadicPoly&, const PadicPoly&) = default;

 private:
  Prime p_ = 2;
  std::vector<PadicInt> coeffs_;
};

PadicPoly operator+(const PadicPoly& a, const PadicPoly& b);
PadicPoly operator-(const PadicPoly& a, const PadicPoly& b);
PadicPoly operator*(const PadicInt& c, const PadicPoly& a);

/// a * b with every term of degree > cap dropped.
PadicPoly mul_truncated(const PadicPoly& a, const PadicPoly& b, std::size_t cap);
PadicPoly pow_truncated(const PadicPoly& a, unsigned e, std::size_t cap);

/// Horner evaluation. The empty polynomial evaluates to zero at u's precision.
PadicInt evaluate(const PadicPoly& a, const PadicInt& u);

}  // namespace deltaop
