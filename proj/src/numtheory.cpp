#include "deltaop/numtheory.hpp"

#include <string>

namespace deltaop {

int legendre_oracle(const mpz_class& a, Prime p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre: p must be an odd prime");
  if (mpz_divisible_ui_p(a.get_mpz_t(), p)) throw DomainError("legendre: p divides a");
  mpz_class r;
  mpz_class base;
  mpz_fdiv_r_ui(base.get_mpz_t(), a.get_mpz_t(), p);
  mpz_class mod = p;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
  return r == 1 ? 1 : -1;
}

PadicInt legendre_series_eval(const PadicInt& a, const LegendreSeriesParams& params) {
  const Prime p = params.p;
  const int N = params.precision;
  if (p == 2) throw DomainError("legendre series: p must be odd");
  if (a.prime() != p) throw DomainError("legendre series: point has the wrong prime");
  if (!a.is_unit()) throw DomainError("legendre series: " + to_string(a) + " is not a unit");
  if (N < 1 || params.terms < 0) throw DomainError("legendre series: bad precision or term count");
  if (a.precision() < N + 2) {
    throw PrecisionError("legendre series: point needs precision >= " + std::to_string(N + 2));
  }

  const PadicInt x = a.reduced(N + 2);
  const PadicInt da = delta(x).reduced(N);
  const PadicInt inv_ap = unit_inverse(x).pow(p).reduced(N);  // a^(-p)
  const PadicInt inv2 = unit_inverse(make_reduced(p, N, 2));
  const PadicInt inv4 = inv2 * inv2;

  // term_n = (-1)^(n-1) C_{n-1} p^n 2^(1-2n) (delta a)^n a^(-pn)
  PadicInt z = da * inv_ap;  // (delta a) a^(-p)
  PadicInt z_pow = make_reduced(p, N, 1);
  PadicInt two_pow = inv2;  // 2^(1-2n), starting at n = 1
  mpz_class catalan = 1;    // C_0
  PadicInt sum = make_reduced(p, N, 1);
  for (int n = 1; n <= params.terms; ++n) {
    z_pow *= z;
    if (n > 1) {
      // C_{n-1} = C_{n-2} * 2(2n-3) / n
      catalan = catalan * (2 * (2 * n - 3));
      mpz_divexact_ui(catalan.get_mpz_t(), catalan.get_mpz_t(), static_cast<unsigned long>(n));
      two_pow *= inv4;
    }
    mpz_class c = catalan * prime_power(p, n);
    if (n % 2 == 0) c = -c;
    sum += (two_pow * z_pow).times(c);
  }
  return x.reduced(N).pow((p - 1) / 2) * sum;
}

LocalFunctionData locally_constant_to_level_m(const std::vector<PadicInt>& values, Prime p, int m,
                                              int precision, int K) {
  std::size_t discs = 1;
  for (int i = 0; i < m; ++i) discs *= p;
  if (values.size() != discs) {
    throw DomainError("locally constant data: " + std::to_string(values.size()) +
                      " values given, " + std::to_string(discs) + " discs required");
  }
  LocalFunctionData out;
  out.p = p;
  out.m = m;
  out.precision = precision;
  out.K = K;
  for (const auto& v : values) {
    if (v.prime() != p) throw DomainError("locally constant data: value with the wrong prime");
    std::vector<PadicInt> s(static_cast<std::size_t>(K) + 1, make_reduced(p, precision, 0));
    s[0] = v.reduced(std::min(precision, v.precision()));
    out.series.push_back(std::move(s));
  }
  out.validate();
  return out;
}

}  // namespace deltaop
