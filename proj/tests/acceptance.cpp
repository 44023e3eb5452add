// Acceptance suite: one line per criterion, PASS or FAIL, with wall time
// checked against the per-criterion budget. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "deltaop/delta_calc.hpp"
#include "deltaop/numtheory.hpp"
#include "deltaop/repr.hpp"
#include "deltaop/roots.hpp"
#include "random_series.hpp"

using namespace deltaop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

const std::vector<std::pair<Prime, int>> kRootGrid{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2},
                                                   {3, 3}, {5, 1}, {5, 2}, {7, 1}};

std::size_t pow_size(Prime p, int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c *= p;
  return c;
}

Outcome roots_complete() {
  Outcome o;
  const int N = 32;
  for (auto [p, m] : kRootGrid) {
    const RootSystem rs = compute_Cm(p, m, N);
    const std::size_t count = pow_size(p, m);
    if (rs.size() != count) o.fail("wrong root count");
    std::set<unsigned long> residues;
    for (std::size_t alpha = 0; alpha < rs.size(); ++alpha) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), rs.roots[alpha].value().get_mpz_t(),
                 prime_power(p, m).get_mpz_t());
      residues.insert(r.get_ui());
      // delta^m a = 0 mod p^{N-m}, recomputed from the root itself.
      const PadicInt d = delta_iter(rs.roots[alpha], m);
      if (d.precision() != N - m || !d.is_zero()) {
        o.fail("delta^m a != 0 for p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
    }
    if (residues.size() != count || *residues.rbegin() != count - 1) {
      o.fail("residues not complete for p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome det_unit() {
  Outcome o;
  for (auto [p, m] : kRootGrid) {
    const WMatrix w = build_W(compute_Cm(p, m, 32), IndexOrder(p, m));
    const DetCertificate c = det_unit_certificate(w);
    if (!c.unit) o.fail("det W not a unit for p=" + std::to_string(p) + " m=" + std::to_string(m));
  }
  return o;
}

Outcome expansion_estimates() {
  Outcome o;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(2024);
  const int N = 72;  // enough digits to decide (n-k+1)j-1 <= 59 at j = 12
  const std::size_t K = 12;
  long checks = 0;
  for (Prime p : {2u, 3u, 5u}) {
    for (int n = 0; n <= 4; ++n) {
      for (int k = 0; k <= std::min(n, 3); ++k) {
        for (int s = 0; s < 25; ++s) {
          const PadicInt a = make_reduced(p, N, rng.get_z_range(prime_power(p, N)));
          const DeltaExpansion e = delta_expansion(a, n, k, K);
          if (!(e.poly[0] == delta_iter(a, k))) o.fail("constant term is not delta^k a");
          for (const auto& c : check_le1_bounds(e).checks) {
            ++checks;
            if (c.status != BoundStatus::pass) {
              o.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" +
                     std::to_string(k) + " j=" + std::to_string(c.degree) +
                     (c.status == BoundStatus::violated ? " violated" : " undecidable"));
            }
          }
          if (e.poly[1].precision() <= n - k) o.fail("linear coefficient not decidable");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " coefficient checks";
  return o;
}

Outcome roundtrip() {
  Outcome o;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(7);
  const int N = 24;
  const int K = 6;
  int runs = 0;
  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 2; ++m) {
      for (int t = 0; t < 50; ++t) {
        const CanonicalSeries f = testing::random_series(rng, p, m, K, N);
        const CanonicalSeries back = represent(expand(f, N));
        ++runs;
        for (int n = 0; n <= K; ++n) {
          for (std::size_t b = 0; b < f.order().size(); ++b) {
            if (!back.coeff(b, n).congruent(f.coeff(b, n), N - 2 * m)) {
              o.fail("mismatch at p=" + std::to_string(p) + " m=" + std::to_string(m));
            }
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " series";
  return o;
}

Outcome uniqueness() {
  Outcome o;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(11);
  const int N = 24;
  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 2; ++m) {
      const CanonicalSeries zero(p, m, 6, N);
      const CanonicalSeries back = represent(expand(zero, N));
      for (int n = 0; n <= 6; ++n) {
        for (std::size_t b = 0; b < back.order().size(); ++b) {
          const PadicInt& c = back.coeff(b, n);
          if (!c.is_zero() || c.precision() != N - 2 * m) o.fail("zero does not round-trip to 0");
        }
      }
      for (int t = 0; t < 5; ++t) {
        const CanonicalSeries f = testing::random_series(rng, p, m, 6, N);
        CanonicalSeries g = testing::random_series(rng, p, m, 6, N);
        if (f == g) continue;
        const CanonicalSeries bf = represent(expand(f, N));
        const CanonicalSeries bg = represent(expand(g, N));
        bool differ = false;
        for (int n = 0; n <= 6 && !differ; ++n)
          for (std::size_t b = 0; b < bf.order().size() && !differ; ++b)
            differ = !bf.coeff(b, n).congruent(bg.coeff(b, n), N - 2 * m);
        if (!differ) o.fail("distinct series gave identical round-trip outputs");
      }
    }
  }
  return o;
}

Outcome coefficient_decay() {
  Outcome o;
  const int N = 24;
  const int K = 10;
  for (int m = 1; m <= 2; ++m) {
    for (int l = 0; l <= 5; ++l) {
      const CanonicalSeries f = represent(testing::disc_monomial(3, m, N, K, l));
      for (int n = 0; n <= K; ++n) {
        for (std::size_t b = 0; b < f.order().size(); ++b) {
          const Valuation v = valuation(f.coeff(b, n));
          if (v.value < std::max(0, n - l)) {
            o.fail("m=" + std::to_string(m) + " l=" + std::to_string(l) + " n=" +
                   std::to_string(n) + " has valuation " + std::to_string(v.value));
          }
        }
      }
    }
  }
  return o;
}

Outcome point_consistency() {
  Outcome o;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(13);
  for (auto [p, m] : {std::pair<Prime, int>{3, 1}, {3, 2}, {5, 1}}) {
    // Coefficient k of the local data is drawn from p^k Z_p, which makes every
    // canonical coefficient a[beta,n] divisible by p^n; with K + 1 = N - 2m the
    // dropped x_m-tail vanishes at the compared precision.
    const int K = 12;
    const int N = K + 1 + 2 * m;
    const RootSystem rs = compute_Cm(p, m, N);
    for (int t = 0; t < 100; ++t) {
      const LocalFunctionData l = testing::random_local(rng, p, m, N, K, true);
      const PadicInt x = make_reduced(p, N, rng.get_z_range(prime_power(p, N)));
      const PadicInt a = evaluate_canonical(represent(l), x).value;
      const PadicInt b = evaluate_local(l, x, rs).value;
      if (!a.congruent(b, N - 2 * m)) {
        o.fail("p=" + std::to_string(p) + " m=" + std::to_string(m) + " x=" + to_string(x));
      }
    }
  }
  return o;
}

Outcome legendre() {
  Outcome o;
  const int N = 8;
  for (Prime p : {3u, 5u, 7u}) {
    const long p2 = static_cast<long>(p) * p;
    std::vector<PadicInt> by_residue(p);
    for (long a = 1; a <= p2; ++a) {
      if (a % p == 0) continue;
      const PadicInt v =
          legendre_series_eval(PadicInt::from_integer(p, N + 2, a), {p, N, 10});
      const int expected = legendre_oracle(a, p);
      const mpz_class want = expected == 1 ? mpz_class(1) : prime_power(p, N) - 1;
      if (v.precision() != N || v.value() != want) {
        o.fail("p=" + std::to_string(p) + " a=" + std::to_string(a));
      }
      auto& rep = by_residue[static_cast<std::size_t>(a % p)];
      if (rep.precision() == 0) {
        rep = v;
      } else if (!(rep == v)) {
        o.fail("not constant on the disc of " + std::to_string(a % p));
      }
    }
  }
  return o;
}

Outcome digit_bijection() {
  Outcome o;
  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 3; ++m) {
      const std::size_t count = pow_size(p, m);
      if (count > 125) continue;
      std::set<std::vector<unsigned>> seen;
      for (std::size_t r = 0; r < count; ++r) {
        seen.insert(digit_coords(make_reduced(p, m, static_cast<long>(r)), m));
      }
      if (seen.size() != count) {
        o.fail("not injective for p=" + std::to_string(p) + " m=" + std::to_string(m));
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "roots of delta^m: complete residue system, delta^m a = 0", 10.0, roots_complete},
      {2, "det W is a unit", 5.0, det_unit},
      {3, "delta-expansion coefficient estimates", 30.0, expansion_estimates},
      {4, "represent(expand(F)) = F mod p^(N-2m)", 120.0, roundtrip},
      {5, "uniqueness of the canonical series", 10.0, uniqueness},
      {6, "coefficient decay for disc-supported u^l", 30.0, coefficient_decay},
      {7, "point consistency of represent", 60.0, point_consistency},
      {8, "Legendre symbol series", 30.0, legendre},
      {9, "digit coordinates are a bijection", 5.0, digit_bijection},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.fail("over time budget of " + std::to_string(c.budget_seconds) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d. %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
