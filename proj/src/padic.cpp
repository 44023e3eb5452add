#include "deltaop/padic.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace deltaop {

namespace {

void require_operand(const PadicInt& x, const char* op) {
  if (x.precision() < 1) {
    throw PrecisionError(std::string(op) + ": operand carries no digits (precision 0)");
  }
}

Prime common_prime(const PadicInt& x, const PadicInt& y, const char* op) {
  if (x.prime() != y.prime()) {
    throw DomainError(std::string(op) + ": mismatched primes " + std::to_string(x.prime()) +
                      " and " + std::to_string(y.prime()));
  }
  require_operand(x, op);
  require_operand(y, op);
  return x.prime();
}

mpz_class mod_nonneg(const mpz_class& z, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class powm(const mpz_class& base, unsigned long e, const mpz_class& m) {
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, m.get_mpz_t());
  return r;
}

}  // namespace

bool is_prime(Prime p) {
  if (p < 2) return false;
  for (Prime d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

const mpz_class& prime_power(Prime p, int n) {
  thread_local std::map<std::pair<Prime, int>, mpz_class> cache;
  auto [it, inserted] = cache.try_emplace({p, n});
  if (inserted) mpz_ui_pow_ui(it->second.get_mpz_t(), p, static_cast<unsigned long>(n));
  return it->second;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.at_least) return os << ">=" << v.value;
  return os << v.value;
}

PadicInt make_reduced(Prime p, int n, mpz_class v) {
  return PadicInt(p, n, mod_nonneg(v, prime_power(p, n)));
}

PadicInt PadicInt::from_integer(Prime p, int precision, const mpz_class& z) {
  if (!is_prime(p)) throw DomainError("from_integer: " + std::to_string(p) + " is not prime");
  if (precision < 1) throw PrecisionError("from_integer: precision must be at least 1");
  return make_reduced(p, precision, z);
}

bool PadicInt::is_unit() const { return n_ >= 1 && mpz_divisible_ui_p(v_.get_mpz_t(), p_) == 0; }

mpz_class PadicInt::signed_value() const {
  const mpz_class& m = modulus();
  if (2 * v_ > m) return v_ - m;
  return v_;
}

PadicInt PadicInt::reduced(int precision) const {
  if (precision > n_) {
    throw PrecisionError("reduced: cannot raise precision from " + std::to_string(n_) + " to " +
                         std::to_string(precision));
  }
  if (precision < 0) throw DomainError("reduced: negative precision");
  return make_reduced(p_, precision, v_);
}

bool PadicInt::congruent(const PadicInt& other, int digits) const {
  if (p_ != other.p_) return false;
  if (digits > n_ || digits > other.n_) {
    throw PrecisionError("congruent: comparison needs " + std::to_string(digits) + " digits");
  }
  const mpz_class& m = prime_power(p_, digits);
  return mod_nonneg(v_ - other.v_, m) == 0;
}

PadicInt PadicInt::operator-() const {
  require_operand(*this, "neg");
  return make_reduced(p_, n_, -v_);
}

PadicInt operator+(const PadicInt& x, const PadicInt& y) {
  Prime p = common_prime(x, y, "add");
  return make_reduced(p, std::min(x.n_, y.n_), x.v_ + y.v_);
}

PadicInt operator-(const PadicInt& x, const PadicInt& y) {
  Prime p = common_prime(x, y, "sub");
  return make_reduced(p, std::min(x.n_, y.n_), x.v_ - y.v_);
}

PadicInt operator*(const PadicInt& x, const PadicInt& y) {
  Prime p = common_prime(x, y, "mul");
  return make_reduced(p, std::min(x.n_, y.n_), x.v_ * y.v_);
}

PadicInt PadicInt::times(const mpz_class& c) const {
  require_operand(*this, "times");
  return make_reduced(p_, n_, v_ * c);
}

PadicInt PadicInt::pow(unsigned long e) const {
  require_operand(*this, "pow");
  return PadicInt(p_, n_, powm(v_, e, modulus()));
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) {
  return os << '(' << x.prime() << ',' << x.precision() << ',' << x.value().get_str() << ')';
}

std::string to_string(const PadicInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

PadicInt scale_by_p(const PadicInt& x) {
  require_operand(x, "scale_by_p");
  return make_reduced(x.prime(), x.precision() + 1, x.value() * x.prime());
}

PadicInt exact_div_p_power(const PadicInt& x, int k) {
  require_operand(x, "exact_div_p_power");
  if (k > x.precision()) {
    throw PrecisionError("exact_div_p_power: dividing by p^" + std::to_string(k) +
                         " needs more than " + std::to_string(x.precision()) + " digits");
  }
  const mpz_class& d = prime_power(x.prime(), k);
  if (!mpz_divisible_p(x.value().get_mpz_t(), d.get_mpz_t())) {
    throw DomainError("exact_div_p_power: value not divisible by p^" + std::to_string(k));
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.value().get_mpz_t(), d.get_mpz_t());
  return make_reduced(x.prime(), x.precision() - k, std::move(q));
}

Valuation valuation(const PadicInt& x) {
  require_operand(x, "valuation");
  if (x.is_zero()) return {x.precision(), true};
  mpz_class v = x.value();
  int i = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), x.prime())) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), x.prime());
    ++i;
  }
  return {i, false};
}

PadicInt unit_inverse(const PadicInt& x) {
  require_operand(x, "unit_inverse");
  if (!x.is_unit()) {
    throw DomainError("unit_inverse: " + to_string(x) + " is not a unit");
  }
  mpz_class r;
  mpz_invert(r.get_mpz_t(), x.value().get_mpz_t(), x.modulus().get_mpz_t());
  return make_reduced(x.prime(), x.precision(), std::move(r));
}

PadicInt delta(const PadicInt& x) {
  if (x.precision() < 2) {
    throw PrecisionError("delta: needs precision >= 2, got " + std::to_string(x.precision()));
  }
  const Prime p = x.prime();
  const mpz_class& m = x.modulus();
  mpz_class diff = mod_nonneg(x.value() - powm(x.value(), p, m), m);
  if (!mpz_divisible_ui_p(diff.get_mpz_t(), p)) {
    throw InternalError("delta: a - a^p not divisible by p for " + to_string(x));
  }
  mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), p);
  return make_reduced(p, x.precision() - 1, std::move(diff));
}

PadicInt delta_iter(const PadicInt& x, int k) {
  if (k < 0) throw DomainError("delta_iter: negative iterate count");
  if (x.precision() < k + 1) {
    throw PrecisionError("delta_iter: " + std::to_string(k) + " iterates need precision >= " +
                         std::to_string(k + 1) + ", got " + std::to_string(x.precision()));
  }
  PadicInt r = x;
  for (int i = 0; i < k; ++i) r = delta(r);
  return r;
}

PadicInt hensel_root(Prime p, int precision, const PadicInt& a, unsigned j) {
  if (precision < 1) throw PrecisionError("hensel_root: precision must be at least 1");
  if (a.prime() != p) throw DomainError("hensel_root: center has the wrong prime");
  if (a.precision() < precision) {
    throw PrecisionError("hensel_root: center known to " + std::to_string(a.precision()) +
                         " digits, " + std::to_string(precision) + " requested");
  }
  if (j >= p) throw DomainError("hensel_root: branch must lie in [0, p)");

  const mpz_class& m = prime_power(p, precision);
  const mpz_class pa = a.value() * p;
  mpz_class t = j;
  // f(t) = t^p - t + pa, f'(t) = p t^(p-1) - 1 is a unit, so Newton converges
  // quadratically from any t = j mod p.
  for (int step = 0; step < 2 * precision + 8; ++step) {
    mpz_class f = mod_nonneg(powm(t, p, m) - t + pa, m);
    if (f == 0) return make_reduced(p, precision, t);
    mpz_class df = mod_nonneg(powm(t, p - 1, m) * p - 1, m);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), m.get_mpz_t());
    t = mod_nonneg(t - f * inv, m);
  }
  throw InternalError("hensel_root: Newton iteration did not stabilize");
}

}  // namespace deltaop
