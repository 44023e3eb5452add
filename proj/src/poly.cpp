#include "deltaop/poly.hpp"

#include <algorithm>

namespace deltaop {

PadicPoly::PadicPoly(Prime p, std::vector<PadicInt> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.prime() != p_) throw DomainError("PadicPoly: coefficient with a different prime");
  }
}

int PadicPoly::min_precision() const {
  if (coeffs_.empty()) return -1;
  int n = coeffs_.front().precision();
  for (const auto& c : coeffs_) n = std::min(n, c.precision());
  return n;
}

PadicPoly PadicPoly::truncated(std::size_t cap) const {
  if (coeffs_.size() <= cap + 1) return *this;
  return PadicPoly(p_, std::vector<PadicInt>(coeffs_.begin(), coeffs_.begin() + cap + 1));
}

PadicPoly operator+(const PadicPoly& a, const PadicPoly& b) {
  const PadicPoly& longer = a.size() >= b.size() ? a : b;
  const PadicPoly& shorter = a.size() >= b.size() ? b : a;
  PadicPoly r = longer;
  for (std::size_t j = 0; j < shorter.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

PadicPoly operator-(const PadicPoly& a, const PadicPoly& b) {
  std::vector<PadicInt> out(std::max(a.size(), b.size()));
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j < a.size() && j < b.size()) {
      out[j] = a[j] - b[j];
    } else if (j < a.size()) {
      out[j] = a[j];
    } else {
      out[j] = -b[j];
    }
  }
  return PadicPoly(a.size() ? a.prime() : b.prime(), std::move(out));
}

PadicPoly operator*(const PadicInt& c, const PadicPoly& a) {
  std::vector<PadicInt> out;
  out.reserve(a.size());
  for (const auto& x : a.coeffs()) out.push_back(c * x);
  return PadicPoly(c.prime(), std::move(out));
}

PadicPoly mul_truncated(const PadicPoly& a, const PadicPoly& b, std::size_t cap) {
  if (a.empty() || b.empty()) return PadicPoly(a.prime());
  const std::size_t len = std::min(a.size() + b.size() - 1, cap + 1);
  const Prime p = a.prime();
  // Accumulate raw representatives per degree, reduce once at the end.
  std::vector<mpz_class> acc(len);
  std::vector<int> prec(len, -1);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (a[i].prime() != b[j].prime()) throw DomainError("mul_truncated: mismatched primes");
      if (a[i].precision() < 1 || b[j].precision() < 1) {
        throw PrecisionError("mul_truncated: coefficient carries no digits");
      }
      acc[i + j] += a[i].value() * b[j].value();
      int n = std::min(a[i].precision(), b[j].precision());
      prec[i + j] = prec[i + j] < 0 ? n : std::min(prec[i + j], n);
    }
  }
  std::vector<PadicInt> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(make_reduced(p, prec[k], std::move(acc[k])));
  return PadicPoly(p, std::move(out));
}

PadicPoly pow_truncated(const PadicPoly& a, unsigned e, std::size_t cap) {
  if (e == 0) {
    int n = a.empty() ? 1 : a.min_precision();
    return PadicPoly(a.prime(), {make_reduced(a.prime(), std::max(n, 1), 1)});
  }
  PadicPoly base = a.truncated(cap);
  PadicPoly result;
  bool have = false;
  while (e) {
    if (e & 1u) {
      result = have ? mul_truncated(result, base, cap) : base;
      have = true;
    }
    e >>= 1u;
    if (e) base = mul_truncated(base, base, cap);
  }
  return result;
}

PadicInt evaluate(const PadicPoly& a, const PadicInt& u) {
  if (a.empty()) return make_reduced(u.prime(), u.precision(), 0);
  PadicInt r = a[a.size() - 1];
  for (std::size_t j = a.size() - 1; j-- > 0;) r = r * u + a[j];
  return r;
}

}  // namespace deltaop
