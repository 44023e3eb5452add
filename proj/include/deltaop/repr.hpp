#pragma once

/**
 * Two encodings of an analytic function f : Z_p -> Z_p of level m.
 *
 * LocalFunctionData: one power series per disc. Disc alpha is the residue
 * class alpha mod p^m, parameterized through its delta^m-root,
 *
 *     f(a_alpha + p^m u) = sum_k g[alpha][k] u^k,     a_alpha in C_m.
 *
 * CanonicalSeries: the unique series F with degree <= p-1 in each of
 * x_0..x_{m-1} such that
 *
 *     f(x) = F(x, delta x, ..., delta^m x) = sum_{beta,n} a[beta,n] x^beta (delta^m x)^n.
 *
 * expand() goes from F to the local data by substituting delta-expansions;
 * represent() inverts it one power of u at a time, solving W a[.,k] = rhs
 * with the unit matrix W. Both sides are truncated at degree K (in u and in
 * x_m respectively); the coefficient a[beta,k] depends only on local data up
 * to u^k, so the truncation is exact in the computed range.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "deltaop/padic.hpp"
#include "deltaop/poly.hpp"
#include "deltaop/roots.hpp"

namespace deltaop {

struct LocalFunctionData {
  Prime p = 2;
  int m = 0;
  int precision = 0;  // N
  int K = 0;
  /// series[alpha][k], alpha in 0..p^m-1, k in 0..K.
  std::vector<std::vector<PadicInt>> series;

  /// Throws DomainError when the shape or primes are inconsistent.
  void validate() const;
};

class CanonicalSeries {
 public:
  CanonicalSeries() = default;
  /// All-zero series with coefficients at `precision`.
  CanonicalSeries(Prime p, int m, int K, int precision);

  Prime prime() const { return p_; }
  int m() const { return m_; }
  int K() const { return K_; }
  const IndexOrder& order() const { return order_; }
  int min_precision() const;

  /// a[beta, n], beta given by its position in order().
  const PadicInt& coeff(std::size_t beta, int n) const;
  PadicInt& coeff(std::size_t beta, int n);
  const PadicInt& coeff(std::span<const unsigned> beta, int n) const {
    return coeff(order_.index_of(beta), n);
  }
  PadicInt& coeff(std::span<const unsigned> beta, int n) { return coeff(order_.index_of(beta), n); }

  friend bool operator==(const CanonicalSeries&, const CanonicalSeries&) = default;

 private:
  Prime p_ = 2;
  int m_ = 0;
  int K_ = 0;
  IndexOrder order_;
  std::vector<PadicInt> coeffs_;  // [n * |I'| + beta]
};

/// Per-disc polynomial data shared by expand and represent.
struct DiscBasis {
  RootSystem roots;
  IndexOrder order;
  int K = 0;
  /// mono[alpha][beta] = prod_{i<m} (delta^i(a_alpha + p^m u))^(beta_i) mod u^{K+1}
  std::vector<std::vector<PadicPoly>> mono;
  /// last_pow[alpha][n] = (delta^m(a_alpha + p^m u))^n mod u^{K+1}, constant term zero.
  std::vector<std::vector<PadicPoly>> last_pow;
  /// Linear coefficient of delta^m(a_alpha + p^m u); always a unit.
  std::vector<PadicInt> linear_unit;
};

DiscBasis build_disc_basis(Prime p, int m, int precision, int K);

/// Local series of F on every disc, at precision N - m.
LocalFunctionData expand(const CanonicalSeries& f, int precision);

/// Called after step k of represent with the residuals R_alpha.
using RepresentObserver = std::function<void(int k, std::span<const PadicPoly> residuals)>;

/// The canonical series of the function described by `local`, at precision N - m.
CanonicalSeries represent(const LocalFunctionData& local, const RepresentObserver& observer = {});

struct PointValue {
  PadicInt value;
  /// Lower bound on the valuation of the dropped tail, assuming every
  /// dropped coefficient is a p-adic integer. Equal to value.precision()
  /// or more when the truncation is invisible at that precision.
  int tail_valuation_bound = 0;
};

/// F(x, delta x, ..., delta^m x). Requires precision of x >= m + 1.
PointValue evaluate_canonical(const CanonicalSeries& f, const PadicInt& x);

/// g_alpha((x - a_alpha)/p^m) with alpha = x mod p^m.
PointValue evaluate_local(const LocalFunctionData& local, const PadicInt& x);
PointValue evaluate_local(const LocalFunctionData& local, const PadicInt& x,
                          const RootSystem& roots);

struct RoundtripReport {
  bool pass = false;
  int modulus_digits = 0;  // N - 2m
  /// Smallest v_p(recovered - original) over all coefficients.
  Valuation worst_deviation;
  /// Per coefficient, indexed like CanonicalSeries: [n * |I'| + beta].
  std::vector<Valuation> deviations;
};

/// represent(expand(F, N)) compared with F mod p^{N-2m}.
RoundtripReport roundtrip_report(const CanonicalSeries& f, int precision);

}  // namespace deltaop
