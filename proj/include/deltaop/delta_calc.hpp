#pragma once

/**
 * delta-expansions: for x = a + p^n u, the iterate delta^k(x) is a polynomial
 * in u of degree p^k,
 *
 *     delta^k(a + p^n u) = sum_j c_j u^j,
 *
 * with c_0 = delta^k(a), v_p(c_1) = n - k exactly, and
 * v_p(c_j) >= (n - k + 1) j - 1 for j >= 2.
 *
 * The polynomial is built one Fermat quotient at a time, P -> (P - P^p)/p,
 * truncated at a caller-chosen degree cap D. The coefficients above D are not
 * computed; their valuations are bounded below by (n - k + 1)(D + 1) - 1.
 */

#include <optional>
#include <vector>

#include "deltaop/padic.hpp"
#include "deltaop/poly.hpp"

namespace deltaop {

/// (P - P^p)/p truncated at degree `cap`. Every coefficient loses one digit.
/// Throws InternalError if some coefficient of P - P^p is not divisible by p,
/// which only happens when P is not an admissible delta-expansion.
PadicPoly delta_poly_step(const PadicPoly& poly, std::size_t cap);

struct DeltaExpansion {
  PadicInt center;
  int level = 0;  // n: the disc is center + p^n Z_p
  int order = 0;  // k: the iterate delta^k
  std::size_t cap = 0;
  PadicPoly poly;
  /// Lower bound on v_p of every dropped coefficient (degree > cap), or
  /// nullopt when the full polynomial (degree p^k) fits under the cap.
  std::optional<int> tail_valuation_bound;
};

/// delta^k(a + p^n u) as a polynomial in u, truncated at degree `cap`.
/// Coefficients come out at precision N_a - k.
DeltaExpansion delta_expansion(const PadicInt& center, int level, int order, std::size_t cap);

enum class BoundClaim { constant_term, linear_exact, higher_degree };
enum class BoundStatus { pass, violated, undecidable };

struct BoundCheck {
  BoundClaim claim;
  std::size_t degree;
  Valuation observed;
  int required;  // required valuation (exact for linear_exact, lower bound otherwise)
  BoundStatus status;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;

  bool all_pass() const;
  bool any_violated() const;
  bool any_undecidable() const;
};

BoundsReport check_le1_bounds(const DeltaExpansion& e);

/// (delta^i a mod p) for i = 0..m-1.
std::vector<unsigned> digit_coords(const PadicInt& a, int m);

}  // namespace deltaop
