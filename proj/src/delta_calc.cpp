#include "deltaop/delta_calc.hpp"

#include <algorithm>
#include <string>

namespace deltaop {

PadicPoly delta_poly_step(const PadicPoly& poly, std::size_t cap) {
  if (poly.empty()) return poly;
  const Prime p = poly.prime();
  PadicPoly base = poly.truncated(cap);
  PadicPoly diff = base - pow_truncated(base, p, cap);
  std::vector<PadicInt> out;
  out.reserve(diff.size());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    const PadicInt& c = diff[j];
    if (c.precision() < 1 || !mpz_divisible_ui_p(c.value().get_mpz_t(), p)) {
      throw InternalError("delta_poly_step: coefficient of u^" + std::to_string(j) +
                          " in P - P^p is not divisible by p; the seed is not of the form "
                          "a + p^n u with enough levels");
    }
    out.push_back(exact_div_p_power(c, 1));
  }
  return PadicPoly(p, std::move(out));
}

DeltaExpansion delta_expansion(const PadicInt& center, int level, int order, std::size_t cap) {
  if (order < 0 || level < 0) throw DomainError("delta_expansion: negative level or order");
  if (order > level) {
    throw DomainError("delta_expansion: order k=" + std::to_string(order) +
                      " exceeds disc level n=" + std::to_string(level));
  }
  if (center.precision() < order + 1) {
    throw PrecisionError("delta_expansion: center needs precision >= " +
                         std::to_string(order + 1) + ", got " +
                         std::to_string(center.precision()));
  }
  const Prime p = center.prime();
  std::vector<PadicInt> seed{center};
  if (cap >= 1) seed.push_back(make_reduced(p, center.precision(), prime_power(p, level)));
  PadicPoly poly(p, std::move(seed));
  for (int i = 0; i < order; ++i) poly = delta_poly_step(poly, cap);

  DeltaExpansion e{center, level, order, cap, std::move(poly), std::nullopt};
  // The untruncated polynomial has degree p^k; anything above cap was dropped.
  mpz_class full_degree = prime_power(p, order);
  if (full_degree > cap) {
    e.tail_valuation_bound = (level - order + 1) * static_cast<int>(cap + 1) - 1;
  }
  return e;
}

bool BoundsReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.status == BoundStatus::pass; });
}

bool BoundsReport::any_violated() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.status == BoundStatus::violated; });
}

bool BoundsReport::any_undecidable() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.status == BoundStatus::undecidable; });
}

namespace {

BoundStatus check_lower_bound(const Valuation& v, int required) {
  if (v.value >= required) return BoundStatus::pass;
  return v.at_least ? BoundStatus::undecidable : BoundStatus::violated;
}

BoundStatus check_exact(const Valuation& v, int required) {
  if (v.is_exact()) return v.value == required ? BoundStatus::pass : BoundStatus::violated;
  // Only "v_p >= N" is known.
  return v.value > required ? BoundStatus::violated : BoundStatus::undecidable;
}

}  // namespace

BoundsReport check_le1_bounds(const DeltaExpansion& e) {
  BoundsReport report;
  const int drop = e.level - e.order;
  for (std::size_t j = 0; j < e.poly.size(); ++j) {
    const PadicInt& c = e.poly[j];
    if (c.precision() < 1) {
      report.checks.push_back({j == 0   ? BoundClaim::constant_term
                               : j == 1 ? BoundClaim::linear_exact
                                        : BoundClaim::higher_degree,
                               j, Valuation{0, true}, 0, BoundStatus::undecidable});
      continue;
    }
    Valuation v = valuation(c);
    if (j == 0) {
      // Every stored coefficient is a p-adic integer, so |c_0| <= 1 holds.
      report.checks.push_back({BoundClaim::constant_term, j, v, 0, BoundStatus::pass});
    } else if (j == 1) {
      report.checks.push_back({BoundClaim::linear_exact, j, v, drop, check_exact(v, drop)});
    } else {
      int required = (drop + 1) * static_cast<int>(j) - 1;
      report.checks.push_back(
          {BoundClaim::higher_degree, j, v, required, check_lower_bound(v, required)});
    }
  }
  return report;
}

std::vector<unsigned> digit_coords(const PadicInt& a, int m) {
  if (m < 0) throw DomainError("digit_coords: negative length");
  if (m > 0 && a.precision() < m) {
    throw PrecisionError("digit_coords: " + std::to_string(m) + " coordinates need precision >= " +
                         std::to_string(m) + ", got " + std::to_string(a.precision()));
  }
  std::vector<unsigned> out;
  out.reserve(static_cast<std::size_t>(m));
  PadicInt x = a;
  for (int i = 0; i < m; ++i) {
    out.push_back(static_cast<unsigned>(mpz_fdiv_ui(x.value().get_mpz_t(), a.prime())));
    if (i + 1 < m) x = delta(x);
  }
  return out;
}

}  // namespace deltaop
