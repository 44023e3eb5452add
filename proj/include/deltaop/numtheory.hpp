#pragma once

// The Legendre symbol as an order-one arithmetic differential operator,
// and locally constant functions as level-m local data.
//
// For odd p and a unit a,
//
//   (a/p) = a^((p-1)/2) * (1 + sum_{n>=1} (-1)^(n-1) C_{n-1} p^n / 2^(2n-1) * (delta a)^n a^(-pn))
//
// with C_{n-1} = (2n-2)!/((n-1)! n!) the Catalan numbers. The sum is the
// binomial series of sqrt(1 + z) at z = p delta(a) a^(-p) = a^(1-p) - 1, and
// term n has valuation >= n.

#include <vector>

#include "deltaop/padic.hpp"
#include "deltaop/repr.hpp"

namespace deltaop {

struct LegendreSeriesParams {
  Prime p = 3;
  int precision = 8;  // N
  int terms = 8;      // T
};

/// Euler's criterion. Throws DomainError for even p or p | a.
int legendre_oracle(const mpz_class& a, Prime p);

/// Truncated series value at precision N. Requires a unit with precision >= N + 2.
PadicInt legendre_series_eval(const PadicInt& a, const LegendreSeriesParams& params);

/// Local data whose disc alpha carries the constant values[alpha].
LocalFunctionData locally_constant_to_level_m(const std::vector<PadicInt>& values, Prime p, int m,
                                              int precision, int K);

}  // namespace deltaop
