#pragma once

/**
 * Truncated p-adic integers.
 *
 * A PadicInt is the congruence class {x in Z_p : x = v mod p^N}. Every
 * operation returns a class that contains the exact result for every member
 * of its input classes, so precision only ever goes down (except for
 * multiplication by p, which learns one digit).
 *
 * Ring operations use the conservative rule N_out = min(N_x, N_y).
 * The Fermat quotient delta(a) = (a - a^p)/p costs exactly one digit.
 */

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace deltaop {

using Prime = std::uint32_t;

/// Not enough known digits to carry out the requested operation.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain (non-prime, non-unit, k > n...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant that cannot fail for valid inputs did fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(Prime p);

/// p^n, memoized per thread.
const mpz_class& prime_power(Prime p, int n);

/// Valuation of a truncated value. When every known digit is zero the
/// valuation is only bounded below by the precision.
struct Valuation {
  int value = 0;
  bool at_least = false;

  bool is_exact() const { return !at_least; }
  /// True when v_p >= bound is certain.
  bool certainly_at_least(int bound) const { return value >= bound; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

class PadicInt {
 public:
  /// Zero at precision zero; poisons any arithmetic that consumes it.
  PadicInt() = default;

  static PadicInt from_integer(Prime p, int precision, const mpz_class& z);
  static PadicInt from_integer(Prime p, int precision, long z) {
    return from_integer(p, precision, mpz_class(z));
  }

  Prime prime() const { return p_; }
  int precision() const { return n_; }
  const mpz_class& value() const { return v_; }
  const mpz_class& modulus() const { return prime_power(p_, n_); }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const;
  /// value() as the symmetric representative in (-p^N/2, p^N/2].
  mpz_class signed_value() const;

  /// Forget digits: same class at a lower precision.
  PadicInt reduced(int precision) const;
  /// True when the two classes agree in their first `digits` digits.
  bool congruent(const PadicInt& other, int digits) const;

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator-(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator*(const PadicInt& x, const PadicInt& y);
  PadicInt& operator+=(const PadicInt& y) { return *this = *this + y; }
  PadicInt& operator-=(const PadicInt& y) { return *this = *this - y; }
  PadicInt& operator*=(const PadicInt& y) { return *this = *this * y; }

  /// Multiply by an ordinary integer; precision is unchanged.
  PadicInt times(const mpz_class& c) const;
  PadicInt pow(unsigned long e) const;

  /// Structural equality: same prime, precision and representative.
  friend bool operator==(const PadicInt&, const PadicInt&) = default;

 private:
  PadicInt(Prime p, int n, mpz_class v) : p_(p), n_(n), v_(std::move(v)) {}
  friend PadicInt make_reduced(Prime p, int n, mpz_class v);

  Prime p_ = 2;
  int n_ = 0;
  mpz_class v_ = 0;
};

/// Builds a PadicInt from an arbitrary representative without checking p.
PadicInt make_reduced(Prime p, int n, mpz_class v);

std::ostream& operator<<(std::ostream& os, const PadicInt& x);
/// "(p,N,v)".
std::string to_string(const PadicInt& x);

/// p * x, known to one more digit than x.
PadicInt scale_by_p(const PadicInt& x);

/// (x / p^k) for x with v_p(x) >= k; loses k digits.
PadicInt exact_div_p_power(const PadicInt& x, int k);

Valuation valuation(const PadicInt& x);

/// Inverse of a unit at the same precision. Throws DomainError on non-units.
PadicInt unit_inverse(const PadicInt& x);

/// The Fermat quotient (x - x^p)/p at precision N - 1.
PadicInt delta(const PadicInt& x);

/// k-fold Fermat quotient at precision N - k.
PadicInt delta_iter(const PadicInt& x, int k);

/// The root t = j (mod p) of t^p - t + p a, to `precision` digits, by Newton
/// iteration. Every branch j in [0, p) lifts.
PadicInt hensel_root(Prime p, int precision, const PadicInt& a, unsigned j);

}  // namespace deltaop
