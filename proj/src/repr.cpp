#include "deltaop/repr.hpp"

#include <algorithm>
#include <string>

#include "deltaop/delta_calc.hpp"

namespace deltaop {

namespace {

std::size_t disc_count(Prime p, int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c *= p;
  return c;
}

PadicPoly zero_poly(Prime p, int precision, int K) {
  return PadicPoly(p, std::vector<PadicInt>(static_cast<std::size_t>(K) + 1,
                                            make_reduced(p, precision, 0)));
}

}  // namespace

void LocalFunctionData::validate() const {
  if (!is_prime(p)) throw DomainError("local data: " + std::to_string(p) + " is not prime");
  if (m < 0 || K < 0) throw DomainError("local data: negative level or truncation");
  const std::size_t discs = disc_count(p, m);
  if (series.size() != discs) {
    throw DomainError("local data: " + std::to_string(series.size()) + " discs given, " +
                      std::to_string(discs) + " required");
  }
  for (std::size_t alpha = 0; alpha < discs; ++alpha) {
    if (series[alpha].size() != static_cast<std::size_t>(K) + 1) {
      throw DomainError("local data: disc " + std::to_string(alpha) + " has " +
                        std::to_string(series[alpha].size()) + " coefficients, expected K+1 = " +
                        std::to_string(K + 1));
    }
    for (const auto& g : series[alpha]) {
      if (g.prime() != p) throw DomainError("local data: coefficient with the wrong prime");
      if (g.precision() < 1) throw PrecisionError("local data: coefficient carries no digits");
    }
  }
}

CanonicalSeries::CanonicalSeries(Prime p, int m, int K, int precision)
    : p_(p), m_(m), K_(K), order_(p, m) {
  if (K < 0) throw DomainError("canonical series: negative truncation");
  coeffs_.assign(order_.size() * static_cast<std::size_t>(K + 1), make_reduced(p, precision, 0));
}

int CanonicalSeries::min_precision() const {
  int n = coeffs_.empty() ? 0 : coeffs_.front().precision();
  for (const auto& c : coeffs_) n = std::min(n, c.precision());
  return n;
}

const PadicInt& CanonicalSeries::coeff(std::size_t beta, int n) const {
  return coeffs_.at(static_cast<std::size_t>(n) * order_.size() + beta);
}

PadicInt& CanonicalSeries::coeff(std::size_t beta, int n) {
  return coeffs_.at(static_cast<std::size_t>(n) * order_.size() + beta);
}

DiscBasis build_disc_basis(Prime p, int m, int precision, int K) {
  DiscBasis b;
  b.roots = compute_Cm(p, m, precision);
  b.order = IndexOrder(p, m);
  b.K = K;
  const auto cap = static_cast<std::size_t>(K);
  // The linear coefficient of delta^m is needed even when K = 0.
  const std::size_t expansion_cap = std::max<std::size_t>(cap, 1);
  const int out_precision = precision - m;

  for (std::size_t alpha = 0; alpha < b.roots.size(); ++alpha) {
    const PadicInt& a = b.roots.roots[alpha];
    std::vector<PadicPoly> expansions;
    for (int i = 0; i <= m; ++i) {
      expansions.push_back(delta_expansion(a, m, i, expansion_cap).poly);
    }
    PadicPoly last = expansions.back();
    // delta^m a_alpha = 0 exactly, so (delta^m)^n starts at u^n.
    last[0] = make_reduced(p, last[0].precision(), 0);
    if (!last[1].is_unit()) {
      throw InternalError("build_disc_basis: linear coefficient of delta^m at disc " +
                          std::to_string(alpha) + " is not a unit");
    }
    b.linear_unit.push_back(last[1].reduced(out_precision));
    last = last.truncated(cap);

    // powers[i][e] = (delta^i(a + p^m u))^e
    std::vector<std::vector<PadicPoly>> powers(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      auto& row = powers[static_cast<std::size_t>(i)];
      const PadicPoly e = expansions[static_cast<std::size_t>(i)].truncated(cap);
      row.push_back(pow_truncated(e, 0, cap));
      for (unsigned k = 1; k < p; ++k) row.push_back(mul_truncated(row.back(), e, cap));
    }
    std::vector<PadicPoly> mono;
    mono.reserve(b.order.size());
    for (const auto& beta : b.order.betas()) {
      PadicPoly prod(p, {make_reduced(p, precision, 1)});
      for (int i = 0; i < m; ++i) {
        prod = mul_truncated(prod, powers[static_cast<std::size_t>(i)][beta[static_cast<std::size_t>(i)]], cap);
      }
      mono.push_back(std::move(prod));
    }
    b.mono.push_back(std::move(mono));

    std::vector<PadicPoly> last_pow{PadicPoly(p, {make_reduced(p, out_precision, 1)})};
    for (int n = 1; n <= K; ++n) last_pow.push_back(mul_truncated(last_pow.back(), last, cap));
    b.last_pow.push_back(std::move(last_pow));
  }
  return b;
}

namespace {

// sum_beta coeffs[beta] * mono[beta], as a polynomial of length K+1.
PadicPoly combine(std::span<const PadicPoly> mono, std::span<const PadicInt> coeffs, Prime p,
                  int precision, int K) {
  PadicPoly s = zero_poly(p, precision, K);
  for (std::size_t beta = 0; beta < mono.size(); ++beta) {
    if (coeffs[beta].is_zero() && coeffs[beta].precision() >= precision) continue;
    s = s + coeffs[beta] * mono[beta];
  }
  return s;
}

}  // namespace

LocalFunctionData expand(const CanonicalSeries& f, int precision) {
  const Prime p = f.prime();
  const int m = f.m();
  const int K = f.K();
  if (precision < m + 1) {
    throw PrecisionError("expand: precision " + std::to_string(precision) +
                         " leaves no digits after the " + std::to_string(m) + "-digit loss");
  }
  const int out_precision = std::min(precision - m, f.min_precision());
  if (out_precision < 1) throw PrecisionError("expand: series coefficients carry no digits");
  const DiscBasis basis = build_disc_basis(p, m, precision, K);
  const std::size_t width = basis.order.size();

  LocalFunctionData out;
  out.p = p;
  out.m = m;
  out.precision = out_precision;
  out.K = K;
  std::vector<PadicInt> layer(width);
  for (std::size_t alpha = 0; alpha < basis.roots.size(); ++alpha) {
    PadicPoly g = zero_poly(p, out_precision, K);
    for (int n = 0; n <= K; ++n) {
      for (std::size_t beta = 0; beta < width; ++beta) layer[beta] = f.coeff(beta, n);
      PadicPoly s = combine(basis.mono[alpha], layer, p, out_precision, K);
      g = g + mul_truncated(s, basis.last_pow[alpha][static_cast<std::size_t>(n)],
                            static_cast<std::size_t>(K));
    }
    std::vector<PadicInt> coeffs(g.coeffs().begin(), g.coeffs().end());
    for (auto& c : coeffs) c = c.reduced(std::min(c.precision(), out_precision));
    out.series.push_back(std::move(coeffs));
  }
  return out;
}

CanonicalSeries represent(const LocalFunctionData& local, const RepresentObserver& observer) {
  local.validate();
  const Prime p = local.p;
  const int m = local.m;
  const int K = local.K;
  int precision = local.precision;
  for (const auto& s : local.series) {
    for (const auto& g : s) precision = std::min(precision, g.precision());
  }
  if (precision < m + 1) {
    throw PrecisionError("represent: local data precision " + std::to_string(precision) +
                         " is too low for level " + std::to_string(m));
  }
  const int out_precision = precision - m;
  const DiscBasis basis = build_disc_basis(p, m, precision, K);
  const WMatrix w = build_W(basis.roots, basis.order);
  const UnitLuSolver solver(w);
  const std::size_t discs = basis.roots.size();
  const auto cap = static_cast<std::size_t>(K);

  std::vector<PadicPoly> residual;
  residual.reserve(discs);
  for (const auto& s : local.series) residual.emplace_back(p, s);
  std::vector<PadicInt> inv_unit;
  std::vector<PadicInt> inv_unit_pow(discs, make_reduced(p, out_precision, 1));
  for (const auto& c : basis.linear_unit) inv_unit.push_back(unit_inverse(c));

  CanonicalSeries out(p, m, K, out_precision);
  std::vector<PadicInt> rhs(discs);
  for (int k = 0; k <= K; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t alpha = 0; alpha < discs; ++alpha) {
      if (k > 0) inv_unit_pow[alpha] *= inv_unit[alpha];
      rhs[alpha] = inv_unit_pow[alpha] * residual[alpha][kk];
    }
    std::vector<PadicInt> layer = solver.solve(rhs);
    for (auto& c : layer) c = c.reduced(std::min(c.precision(), out_precision));
    for (std::size_t beta = 0; beta < layer.size(); ++beta) out.coeff(beta, k) = layer[beta];

    for (std::size_t alpha = 0; alpha < discs; ++alpha) {
      PadicPoly s = combine(basis.mono[alpha], layer, p, out_precision, K);
      residual[alpha] = residual[alpha] - mul_truncated(s, basis.last_pow[alpha][kk], cap);
      const PadicInt& head = residual[alpha][kk];
      if (!head.is_zero()) {
        throw InternalError("represent: residual coefficient u^" + std::to_string(k) +
                            " not annihilated at disc " + std::to_string(alpha));
      }
    }
    if (observer) observer(k, residual);
  }
  return out;
}

PointValue evaluate_canonical(const CanonicalSeries& f, const PadicInt& x) {
  const int m = f.m();
  if (x.prime() != f.prime()) throw DomainError("evaluate_canonical: mismatched primes");
  if (x.precision() < m + 1) {
    throw PrecisionError("evaluate_canonical: point needs precision >= " + std::to_string(m + 1) +
                         ", got " + std::to_string(x.precision()));
  }
  std::vector<PadicInt> iter{x};
  for (int i = 1; i <= m; ++i) iter.push_back(delta(iter.back()));
  const int precision = std::min(x.precision() - m, f.min_precision());
  const Prime p = f.prime();

  std::vector<PadicInt> mono;
  mono.reserve(f.order().size());
  for (const auto& beta : f.order().betas()) {
    PadicInt v = make_reduced(p, precision, 1);
    for (int i = 0; i < m; ++i) {
      v *= iter[static_cast<std::size_t>(i)].pow(beta[static_cast<std::size_t>(i)]);
    }
    mono.push_back(std::move(v));
  }
  const PadicInt& last = iter.back();
  PadicInt value = make_reduced(p, precision, 0);
  for (int n = f.K(); n >= 0; --n) {
    PadicInt layer = make_reduced(p, precision, 0);
    for (std::size_t beta = 0; beta < mono.size(); ++beta) layer += f.coeff(beta, n) * mono[beta];
    value = value * last + layer;
  }
  const int v_last = valuation(last.reduced(std::max(precision, 1))).value;
  return {value, (f.K() + 1) * v_last};
}

PointValue evaluate_local(const LocalFunctionData& local, const PadicInt& x,
                          const RootSystem& roots) {
  local.validate();
  const int m = local.m;
  if (x.prime() != local.p) throw DomainError("evaluate_local: mismatched primes");
  if (x.precision() < m + 1) {
    throw PrecisionError("evaluate_local: point needs precision >= " + std::to_string(m + 1) +
                         ", got " + std::to_string(x.precision()));
  }
  if (roots.p != local.p || roots.m != m) {
    throw DomainError("evaluate_local: root system does not match the local data");
  }
  const mpz_class& pm = prime_power(local.p, m);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.value().get_mpz_t(), pm.get_mpz_t());
  const auto alpha = static_cast<std::size_t>(r.get_ui());
  const PadicInt u = exact_div_p_power(x - roots.roots[alpha], m);

  const auto& g = local.series[alpha];
  PadicInt value = g.back();
  for (std::size_t j = g.size() - 1; j-- > 0;) value = value * u + g[j];
  const int v_u = valuation(u).value;
  return {value, (local.K + 1) * v_u};
}

PointValue evaluate_local(const LocalFunctionData& local, const PadicInt& x) {
  const int precision = std::max({local.precision, x.precision(), local.m + 1});
  return evaluate_local(local, x, compute_Cm(local.p, local.m, precision));
}

RoundtripReport roundtrip_report(const CanonicalSeries& f, int precision) {
  const int m = f.m();
  if (precision <= 2 * m) {
    throw PrecisionError("roundtrip: precision must exceed 2m = " + std::to_string(2 * m));
  }
  const CanonicalSeries back = represent(expand(f, precision));
  RoundtripReport report;
  report.modulus_digits = std::min(precision - 2 * m, back.min_precision());
  report.worst_deviation = {back.min_precision(), true};
  bool pass = true;
  const std::size_t width = f.order().size();
  for (int n = 0; n <= f.K(); ++n) {
    for (std::size_t beta = 0; beta < width; ++beta) {
      PadicInt d = back.coeff(beta, n) - f.coeff(beta, n);
      Valuation v = valuation(d);
      if (v.value < report.worst_deviation.value ||
          (v.value == report.worst_deviation.value && v.is_exact())) {
        report.worst_deviation = v;
      }
      if (v.value < report.modulus_digits) pass = false;
      report.deviations.push_back(v);
    }
  }
  report.pass = pass;
  return report;
}

}  // namespace deltaop
