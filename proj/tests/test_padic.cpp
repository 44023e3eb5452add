#include <doctest.h>

#include <random>

#include "deltaop/padic.hpp"
#include "oracles.hpp"

using namespace deltaop;

namespace {

PadicInt P(Prime p, int n, long v) { return PadicInt::from_integer(p, n, v); }

}  // namespace

TEST_CASE("from_integer normalizes into [0, p^N)") {
  CHECK(P(3, 3, -2).value() == 25);
  CHECK(P(5, 2, 0).value() == 0);
  CHECK(P(3, 4, 100).value() == 19);
  CHECK(P(3, 4, 100).precision() == 4);
  CHECK_THROWS_AS(P(4, 3, 1), DomainError);
  CHECK_THROWS_AS(P(1, 3, 1), DomainError);
  CHECK_THROWS_AS(P(3, 0, 1), PrecisionError);
}

TEST_CASE("ring operations use the min-precision rule") {
  CHECK(P(3, 3, 25) * P(3, 3, 25) == P(3, 3, 4));
  CHECK(P(7, 3, 100) + P(7, 3, 0) == P(7, 3, 100));
  CHECK((P(5, 4, 17) * P(5, 2, 3)).precision() == 2);
  CHECK((P(5, 4, 17) - P(5, 6, 3)).precision() == 4);
  CHECK_THROWS_AS(P(3, 2, 1) + P(5, 2, 1), DomainError);
  CHECK_THROWS_AS(PadicInt() * P(2, 3, 1), PrecisionError);
  CHECK_THROWS_AS(P(2, 3, 1).reduced(0) * P(2, 3, 1), PrecisionError);
}

TEST_CASE("scale_by_p gains one digit") {
  CHECK(scale_by_p(P(3, 2, 4)) == P(3, 3, 12));
  CHECK(scale_by_p(P(5, 1, 3)) == P(5, 2, 15));
  CHECK(scale_by_p(P(7, 4, 0)) == P(7, 5, 0));
}

TEST_CASE("valuation") {
  CHECK(valuation(P(3, 4, 18)) == Valuation{2, false});
  CHECK(valuation(P(3, 4, 0)) == Valuation{4, true});
  CHECK(valuation(P(7, 3, 5)) == Valuation{0, false});
}

TEST_CASE("unit_inverse") {
  CHECK(unit_inverse(P(3, 3, 2)) == P(3, 3, 14));
  CHECK(unit_inverse(P(5, 2, 1)) == P(5, 2, 1));
  CHECK_THROWS_AS(unit_inverse(P(3, 3, 6)), DomainError);

  std::mt19937_64 rng(7);
  for (Prime p : {2u, 3u, 5u, 7u}) {
    int done = 0;
    while (done < 1000) {
      const long v = static_cast<long>(rng() % 1000000007ULL);
      const int n = 1 + static_cast<int>(rng() % 40);
      PadicInt x = P(p, n, v);
      if (!x.is_unit()) continue;
      CHECK((x * unit_inverse(x)).value() == 1);
      ++done;
    }
  }
}

TEST_CASE("delta: fixed points and exact oracle values") {
  for (int n = 2; n < 8; ++n) {
    CHECK(delta(P(3, n, 1)).is_zero());
    CHECK(delta(P(5, n, 0)).is_zero());
    CHECK(delta(P(5, n, 1)).precision() == n - 1);
  }
  CHECK(delta(P(3, 4, 2)) == P(3, 3, 25));
  CHECK(delta(P(5, 4, 2)) == P(5, 3, 119));
  CHECK_THROWS_AS(delta(P(3, 1, 2)), PrecisionError);
}

TEST_CASE("delta_iter") {
  PadicInt x = P(3, 6, 2);
  CHECK(delta_iter(x, 0) == x);
  CHECK(delta_iter(P(3, 6, 1), 2).is_zero());
  PadicInt d2 = delta_iter(x, 2);
  CHECK(d2.precision() == 4);
  CHECK(d2.value() == 2);
  CHECK_THROWS_AS(delta_iter(P(3, 2, 2), 2), PrecisionError);
}

TEST_CASE("property: precision soundness of ring operations") {
  std::mt19937_64 rng(11);
  for (Prime p : {2u, 3u, 5u, 7u, 11u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const mpz_class x = static_cast<long>(rng() % 2000001) - 1000000;
      const mpz_class y = static_cast<long>(rng() % 2000001) - 1000000;
      const int nx = 1 + static_cast<int>(rng() % 20);
      const int ny = 1 + static_cast<int>(rng() % 20);
      const PadicInt px = PadicInt::from_integer(p, nx, x);
      const PadicInt py = PadicInt::from_integer(p, ny, y);
      const int n = std::min(nx, ny);
      const mpz_class m = oracle::pp(p, n);
      CHECK((px + py).value() == oracle::mod(x + y, m));
      CHECK((px - py).value() == oracle::mod(x - y, m));
      CHECK((px * py).value() == oracle::mod(x * y, m));
      CHECK((px * py).precision() == n);
    }
  }
}

TEST_CASE("property: delta agrees with the exact Fermat quotient") {
  std::mt19937_64 rng(13);
  for (Prime p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const mpz_class z = static_cast<long>(rng() % 20001) - 10000;
      const int n = 2 + static_cast<int>(rng() % 25);
      const PadicInt d = delta(PadicInt::from_integer(p, n, z));
      CHECK(d.precision() == n - 1);
      CHECK(d.value() == oracle::mod(oracle::fermat_quotient(z, p), oracle::pp(p, n - 1)));
    }
  }
}

TEST_CASE("property: delta_iter composes") {
  std::mt19937_64 rng(17);
  for (Prime p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 100; ++trial) {
      const PadicInt x = P(p, 12, static_cast<long>(rng() % 1000000));
      const int j = static_cast<int>(rng() % 5);
      const int k = static_cast<int>(rng() % 5);
      CHECK(delta_iter(x, j + k) == delta_iter(delta_iter(x, j), k));
    }
  }
}

TEST_CASE("hensel_root: small cases against brute force") {
  const PadicInt zero3 = P(3, 3, 0);
  CHECK(hensel_root(3, 3, zero3, 0).value() == 0);
  CHECK(hensel_root(3, 3, zero3, 1).value() == 1);
  const auto brute = oracle::brute_force_roots(3, 3, 0, 2);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == 26);
  CHECK(hensel_root(3, 3, zero3, 2).value() == 26);

  const auto brute5 = oracle::brute_force_roots(5, 2, 0, 2);
  REQUIRE(brute5.size() == 1);
  CHECK(brute5[0] == 7);
  CHECK(hensel_root(5, 2, P(5, 2, 0), 2).value() == 7);

  CHECK_THROWS_AS(hensel_root(3, 5, P(3, 3, 0), 0), PrecisionError);
  CHECK_THROWS_AS(hensel_root(3, 3, P(3, 3, 0), 3), DomainError);
}

TEST_CASE("property: hensel_root solves t^p - t + pa on every branch") {
  std::mt19937_64 rng(19);
  for (Prime p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 64);
      const mpz_class a_val = static_cast<long>(rng() % 1000000007ULL);
      const PadicInt a = PadicInt::from_integer(p, n, a_val);
      for (unsigned j = 0; j < p; ++j) {
        const PadicInt t = hensel_root(p, n, a, j);
        const mpz_class m = oracle::pp(p, n);
        CHECK(oracle::mod(oracle::ipow(t.value(), p) - t.value() + p * a.value(), m) == 0);
        CHECK(mpz_fdiv_ui(t.value().get_mpz_t(), p) == j);
      }
    }
  }
}
