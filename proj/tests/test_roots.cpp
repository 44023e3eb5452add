#include <doctest.h>

#include <random>
#include <set>

#include "deltaop/roots.hpp"
#include "oracles.hpp"

using namespace deltaop;

namespace {

std::vector<std::vector<long>> signed_entries(const WMatrix& w) {
  std::vector<std::vector<long>> out(w.dim);
  for (std::size_t a = 0; a < w.dim; ++a)
    for (std::size_t b = 0; b < w.dim; ++b) out[a].push_back(w.at(a, b).signed_value().get_si());
  return out;
}

}  // namespace

TEST_CASE("compute_Cm small cases") {
  const RootSystem c0 = compute_Cm(3, 0, 4);
  REQUIRE(c0.size() == 1);
  CHECK(c0.roots[0].is_zero());

  const RootSystem c1 = compute_Cm(3, 1, 3);
  REQUIRE(c1.size() == 3);
  CHECK(c1.roots[0].value() == 0);
  CHECK(c1.roots[1].value() == 1);
  CHECK(c1.roots[2].value() == 26);
  // Brute force: t^3 = t mod 27 has exactly these three roots with distinct residues mod 3.
  std::set<mpz_class> brute;
  for (unsigned j = 0; j < 3; ++j)
    for (const auto& t : oracle::brute_force_roots(3, 3, 0, j)) brute.insert(t);
  CHECK(brute == std::set<mpz_class>{0, 1, 26});

  const RootSystem c2 = compute_Cm(2, 1, 10);
  CHECK(c2.roots[0].value() == 0);
  CHECK(c2.roots[1].value() == 1);

  CHECK_THROWS_AS(compute_Cm(3, 2, 2), PrecisionError);
  CHECK_THROWS_AS(compute_Cm(6, 1, 4), DomainError);
}

TEST_CASE("property: C_m is a complete residue system of roots of delta^m") {
  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 3; ++m) {
      const unsigned long count = oracle::pp(p, m).get_ui();
      if (count > 125) continue;
      const int N = 20;
      const RootSystem rs = compute_Cm(p, m, N);
      REQUIRE(rs.size() == count);
      for (std::size_t alpha = 0; alpha < count; ++alpha) {
        CHECK(oracle::mod(rs.roots[alpha].value(), oracle::pp(p, m)) == alpha);
        CHECK(rs.iterates[alpha][static_cast<std::size_t>(m)].is_zero());
        CHECK(rs.iterates[alpha][static_cast<std::size_t>(m)].precision() == N - m);
        // Independent check on the integer representative.
        const mpz_class d = oracle::fermat_quotient_iter(rs.roots[alpha].value(), p, m);
        CHECK(oracle::mod(d, oracle::pp(p, N - m)) == 0);
      }
    }
  }
}

TEST_CASE("property: raising the precision refines every root") {
  for (Prime p : {2u, 3u, 5u}) {
    const RootSystem lo = compute_Cm(p, 2, 8);
    const RootSystem hi = compute_Cm(p, 2, 30);
    for (std::size_t alpha = 0; alpha < lo.size(); ++alpha) {
      CHECK(hi.roots[alpha].congruent(lo.roots[alpha], 8));
    }
  }
}

TEST_CASE("IndexOrder is lexicographic with beta_0 most significant") {
  const IndexOrder order(3, 2);
  REQUIRE(order.size() == 9);
  CHECK(order[0] == std::vector<unsigned>{0, 0});
  CHECK(order[1] == std::vector<unsigned>{0, 1});
  CHECK(order[3] == std::vector<unsigned>{1, 0});
  CHECK(order[8] == std::vector<unsigned>{2, 2});
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(order.index_of(order[i]) == i);
  CHECK_THROWS_AS(order.index_of(std::vector<unsigned>{3, 0}), DomainError);
  CHECK(IndexOrder(5, 0).size() == 1);
}

TEST_CASE("build_W small cases") {
  const WMatrix w2 = build_W(compute_Cm(2, 1, 6), IndexOrder(2, 1));
  CHECK(signed_entries(w2) == std::vector<std::vector<long>>{{1, 0}, {1, 1}});

  const WMatrix w3 = build_W(compute_Cm(3, 1, 6), IndexOrder(3, 1));
  CHECK(signed_entries(w3) == std::vector<std::vector<long>>{{1, 0, 0}, {1, 1, 1}, {1, -1, 1}});
  CHECK(w3.precision == 6);
  CHECK(oracle::det_mod_small(signed_entries(w3), 3) == 2);

  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 0; m <= 2; ++m) {
      const WMatrix w = build_W(compute_Cm(p, m, 12), IndexOrder(p, m));
      CHECK(w.precision == 12 - std::max(m - 1, 0));
      for (std::size_t a = 0; a < w.dim; ++a) CHECK(w.at(a, 0).value() == 1);
    }
  }
}

TEST_CASE("det_unit_certificate") {
  const WMatrix w3 = build_W(compute_Cm(3, 1, 6), IndexOrder(3, 1));
  auto c = det_unit_certificate(w3);
  CHECK(c.unit);
  CHECK(c.det_mod_p == 2);

  const WMatrix w22 = build_W(compute_Cm(2, 2, 10), IndexOrder(2, 2));
  CHECK(det_unit_certificate(w22).unit);
  std::vector<std::vector<long>> mod2(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      mod2[a].push_back(static_cast<long>(mpz_fdiv_ui(w22.at(a, b).value().get_mpz_t(), 2)));
  CHECK(oracle::det_mod_small(mod2, 2) == 1);

  // Two equal rows.
  WMatrix bad = w3;
  for (std::size_t b = 0; b < bad.dim; ++b) bad.entries[2 * bad.dim + b] = bad.at(1, b);
  c = det_unit_certificate(bad);
  CHECK_FALSE(c.unit);
  CHECK(c.det_mod_p == 0);
  CHECK(c.valuation == Valuation{bad.precision, true});

  // Row 2 = row 1 + 3 * e_0: det = 3 * minor, valuation exactly 1.
  WMatrix scaled = bad;
  scaled.entries[2 * scaled.dim + 1] = scaled.at(1, 1) + PadicInt::from_integer(3, 6, 3);
  c = det_unit_certificate(scaled);
  CHECK_FALSE(c.unit);
  CHECK(c.valuation == Valuation{1, false});
  CHECK_THROWS_AS(UnitLuSolver{bad}, InternalError);
}

TEST_CASE("solve_unit_system") {
  const WMatrix w3 = build_W(compute_Cm(3, 1, 8), IndexOrder(3, 1));
  auto P = [](long v) { return PadicInt::from_integer(3, 8, v); };
  std::vector<PadicInt> rhs{P(1), P(0), P(0)};
  auto x = solve_unit_system(w3, rhs);
  CHECK(x[0].signed_value() == 1);
  CHECK(x[1].signed_value() == 0);
  CHECK(x[2].signed_value() == -1);

  std::vector<PadicInt> zero{P(0), P(0), P(0)};
  for (const auto& v : solve_unit_system(w3, zero)) CHECK(v.is_zero());

  const UnitLuSolver solver(w3);
  for (std::size_t beta = 0; beta < 3; ++beta) {
    std::vector<PadicInt> col;
    for (std::size_t a = 0; a < 3; ++a) col.push_back(w3.at(a, beta));
    auto e = solver.solve(col);
    for (std::size_t i = 0; i < 3; ++i) CHECK(e[i].value() == (i == beta ? 1 : 0));
  }

  std::vector<PadicInt> low{P(1).reduced(3), P(0), P(0)};
  CHECK(solver.solve(low)[0].precision() == 3);
  CHECK_THROWS_AS(solver.solve(std::vector<PadicInt>{P(1)}), DomainError);
}

TEST_CASE("property: W x = b residuals vanish and det W is a unit") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(23);
  for (Prime p : {2u, 3u, 5u}) {
    for (int m = 1; m <= 3; ++m) {
      if (oracle::pp(p, m) > 125) continue;
      const int N = 16;
      const WMatrix w = build_W(compute_Cm(p, m, N), IndexOrder(p, m));
      CHECK(det_unit_certificate(w).unit);
      const UnitLuSolver solver(w);
      const int trials = p == 5 && m == 3 ? 10 : 100;
      for (int t = 0; t < trials; ++t) {
        const int nr = 1 + static_cast<int>(mpz_class(rng.get_z_range(w.precision)).get_si());
        std::vector<PadicInt> b;
        for (std::size_t i = 0; i < w.dim; ++i)
          b.push_back(make_reduced(p, nr, rng.get_z_range(oracle::pp(p, nr))));
        const auto x = solver.solve(b);
        const mpz_class mod = oracle::pp(p, nr);
        for (std::size_t a = 0; a < w.dim; ++a) {
          mpz_class s = 0;
          for (std::size_t c = 0; c < w.dim; ++c) s += w.at(a, c).value() * x[c].value();
          CHECK(oracle::mod(s - b[a].value(), mod) == 0);
        }
      }
    }
  }
}
