#include "deltaop/roots.hpp"

#include <algorithm>
#include <string>

namespace deltaop {

RootSystem compute_Cm(Prime p, int m, int precision) {
  if (!is_prime(p)) throw DomainError("compute_Cm: " + std::to_string(p) + " is not prime");
  if (m < 0) throw DomainError("compute_Cm: negative level");
  if (precision < m + 1) {
    throw PrecisionError("compute_Cm: level " + std::to_string(m) + " needs precision >= " +
                         std::to_string(m + 1) + ", got " + std::to_string(precision));
  }
  std::vector<PadicInt> level{PadicInt::from_integer(p, precision, 0)};
  for (int l = 1; l <= m; ++l) {
    std::vector<PadicInt> next;
    next.reserve(level.size() * p);
    for (const auto& a : level) {
      for (unsigned j = 0; j < p; ++j) next.push_back(hensel_root(p, precision, a, j));
    }
    level = std::move(next);
  }

  RootSystem rs;
  rs.p = p;
  rs.m = m;
  rs.precision = precision;
  const mpz_class& pm = prime_power(p, m);
  const std::size_t count = level.size();
  rs.roots.resize(count);
  std::vector<bool> seen(count, false);
  for (auto& a : level) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.value().get_mpz_t(), pm.get_mpz_t());
    auto alpha = r.get_ui();
    if (seen[alpha]) throw InternalError("compute_Cm: two roots share a residue mod p^m");
    seen[alpha] = true;
    rs.roots[alpha] = std::move(a);
  }
  rs.iterates.reserve(count);
  for (const auto& a : rs.roots) {
    std::vector<PadicInt> it{a};
    for (int i = 1; i <= m; ++i) it.push_back(delta(it.back()));
    rs.iterates.push_back(std::move(it));
  }
  return rs;
}

IndexOrder::IndexOrder(Prime p, int m) : p_(p), m_(m) {
  if (m < 0) throw DomainError("IndexOrder: negative level");
  std::size_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  betas_.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> beta(static_cast<std::size_t>(m));
    std::size_t rest = idx;
    for (int i = m - 1; i >= 0; --i) {
      beta[static_cast<std::size_t>(i)] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    betas_.push_back(std::move(beta));
  }
}

std::size_t IndexOrder::index_of(std::span<const unsigned> beta) const {
  if (beta.size() != static_cast<std::size_t>(m_)) {
    throw DomainError("IndexOrder: multi-index has length " + std::to_string(beta.size()) +
                      ", expected " + std::to_string(m_));
  }
  std::size_t idx = 0;
  for (unsigned b : beta) {
    if (b >= p_) throw DomainError("IndexOrder: multi-index entry out of range");
    idx = idx * p_ + b;
  }
  return idx;
}

WMatrix build_W(const RootSystem& rs, const IndexOrder& order) {
  if (order.prime() != rs.p || order.m() != rs.m) {
    throw DomainError("build_W: index order does not match the root system");
  }
  const int entry_precision = rs.precision - std::max(rs.m - 1, 0);
  if (entry_precision < 1) throw PrecisionError("build_W: root system precision too low");

  WMatrix w;
  w.p = rs.p;
  w.m = rs.m;
  w.precision = entry_precision;
  w.order = order;
  w.dim = rs.size();
  w.entries.reserve(w.dim * w.dim);
  for (std::size_t alpha = 0; alpha < w.dim; ++alpha) {
    const auto& it = rs.iterates[alpha];
    // powers[i][e] = (delta^i a_alpha)^e
    std::vector<std::vector<PadicInt>> powers(static_cast<std::size_t>(rs.m));
    for (int i = 0; i < rs.m; ++i) {
      PadicInt x = it[static_cast<std::size_t>(i)].reduced(entry_precision);
      auto& row = powers[static_cast<std::size_t>(i)];
      row.push_back(make_reduced(rs.p, entry_precision, 1));
      for (unsigned e = 1; e < rs.p; ++e) row.push_back(row.back() * x);
    }
    for (const auto& beta : order.betas()) {
      PadicInt entry = make_reduced(rs.p, entry_precision, 1);
      for (int i = 0; i < rs.m; ++i) {
        entry *= powers[static_cast<std::size_t>(i)][beta[static_cast<std::size_t>(i)]];
      }
      w.entries.push_back(std::move(entry));
    }
  }
  return w;
}

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix.
mpz_class bareiss_det(std::vector<mpz_class> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(t);
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

}  // namespace

DetCertificate det_unit_certificate(const WMatrix& w) {
  const std::size_t n = w.dim;
  const unsigned long p = w.p;
  std::vector<unsigned long> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = mpz_fdiv_ui(w.entries[i].value().get_mpz_t(), p);

  // Gaussian elimination over F_p.
  unsigned long det = 1;
  for (std::size_t k = 0; k < n && det != 0; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) {
      det = 0;
      break;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[piv * n + c]);
      det = (p - det) % p;
    }
    unsigned long pv = a[k * n + k];
    det = det * pv % p;
    mpz_class inv_z;
    mpz_class pv_z = pv;
    mpz_class p_z = p;
    mpz_invert(inv_z.get_mpz_t(), pv_z.get_mpz_t(), p_z.get_mpz_t());
    unsigned long inv = inv_z.get_ui();
    for (std::size_t i = k + 1; i < n; ++i) {
      unsigned long f = a[i * n + k] * inv % p;
      if (f == 0) continue;
      for (std::size_t c = k; c < n; ++c) {
        a[i * n + c] = (a[i * n + c] + (p - f) * a[k * n + c]) % p;
      }
    }
  }

  DetCertificate cert;
  cert.det_mod_p = static_cast<unsigned>(det);
  cert.unit = det != 0;
  if (cert.unit) {
    cert.valuation = {0, false};
    return cert;
  }
  // Non-unit: the integer determinant of the representatives agrees with
  // det W mod p^N, which fixes the valuation up to the entry precision.
  std::vector<mpz_class> z(n * n);
  for (std::size_t i = 0; i < n * n; ++i) z[i] = w.entries[i].value();
  PadicInt d = make_reduced(w.p, w.precision, bareiss_det(std::move(z), n));
  cert.valuation = valuation(d);
  return cert;
}

UnitLuSolver::UnitLuSolver(const WMatrix& w)
    : p_(w.p), precision_(w.precision), dim_(w.dim), perm_(w.dim), lu_(w.dim * w.dim),
      pivot_inv_(w.dim) {
  const mpz_class& mod = prime_power(p_, precision_);
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n * n; ++i) lu_[i] = w.entries[i].value();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && mpz_divisible_ui_p(lu_[piv * n + k].get_mpz_t(), p_)) ++piv;
    if (piv == n) {
      throw InternalError("UnitLuSolver: no unit pivot in column " + std::to_string(k) +
                          "; det W is not a unit");
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu_[k * n + c], lu_[piv * n + c]);
      std::swap(perm_[k], perm_[piv]);
    }
    mpz_invert(pivot_inv_[k].get_mpz_t(), lu_[k * n + k].get_mpz_t(), mod.get_mpz_t());
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_class f = lu_[i * n + k] * pivot_inv_[k];
      mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), mod.get_mpz_t());
      lu_[i * n + k] = f;
      if (f == 0) continue;
      for (std::size_t c = k + 1; c < n; ++c) {
        mpz_class t = lu_[i * n + c] - f * lu_[k * n + c];
        mpz_fdiv_r(lu_[i * n + c].get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
      }
    }
  }
}

std::vector<PadicInt> UnitLuSolver::solve(std::span<const PadicInt> rhs) const {
  if (rhs.size() != dim_) {
    throw DomainError("solve: right-hand side has " + std::to_string(rhs.size()) +
                      " entries, expected " + std::to_string(dim_));
  }
  int n_r = precision_;
  for (const auto& b : rhs) {
    if (b.prime() != p_) throw DomainError("solve: right-hand side has the wrong prime");
    n_r = std::min(n_r, b.precision());
  }
  if (n_r < 1) throw PrecisionError("solve: right-hand side carries no digits");
  const mpz_class& mod = prime_power(p_, n_r);
  const std::size_t n = dim_;

  std::vector<mpz_class> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s = rhs[perm_[i]].value();
    for (std::size_t j = 0; j < i; ++j) s -= lu_[i * n + j] * y[j];
    mpz_fdiv_r(y[i].get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  }
  std::vector<mpz_class> x(n);
  for (std::size_t i = n; i-- > 0;) {
    mpz_class s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_[i * n + j] * x[j];
    s *= pivot_inv_[i];
    mpz_fdiv_r(x[i].get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  }
  std::vector<PadicInt> out;
  out.reserve(n);
  for (auto& v : x) out.push_back(make_reduced(p_, n_r, std::move(v)));
  return out;
}

std::vector<PadicInt> solve_unit_system(const WMatrix& w, std::span<const PadicInt> rhs) {
  return UnitLuSolver(w).solve(rhs);
}

}  // namespace deltaop
