#pragma once

/**
 * The roots of delta^m and the matrix they define.
 *
 * C_m = {a in Z_p : delta^m a = 0} has exactly p^m elements, one in each
 * residue class mod p^m. It is built level by level: every a in C_{m-1}
 * has p preimages under delta, the roots of t^p - t + p a, one per residue
 * class mod p.
 *
 * W is the p^m x p^m matrix with rows indexed by alpha in {0..p^m-1} and
 * columns by multi-indices beta in {0..p-1}^m,
 *
 *     w[alpha][beta] = prod_{i<m} (delta^i a_alpha)^(beta_i),
 *
 * whose determinant is a p-adic unit. UnitLuSolver factors it over Z/p^N
 * with unit pivots so that repeated solves are cheap.
 */

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "deltaop/padic.hpp"

namespace deltaop {

struct RootSystem {
  Prime p = 2;
  int m = 0;
  int precision = 0;
  /// roots[alpha] = a_alpha, with a_alpha = alpha mod p^m.
  std::vector<PadicInt> roots;
  /// iterates[alpha][i] = delta^i a_alpha for i = 0..m, at precision N - i.
  std::vector<std::vector<PadicInt>> iterates;

  std::size_t size() const { return roots.size(); }
};

/// C_m to `precision` digits. Requires precision >= m + 1.
RootSystem compute_Cm(Prime p, int m, int precision);

/// The column index set {0..p-1}^m in lexicographic order, beta_0 most
/// significant.
class IndexOrder {
 public:
  IndexOrder() = default;
  IndexOrder(Prime p, int m);

  Prime prime() const { return p_; }
  int m() const { return m_; }
  std::size_t size() const { return betas_.size(); }
  const std::vector<unsigned>& operator[](std::size_t i) const { return betas_[i]; }
  const std::vector<std::vector<unsigned>>& betas() const { return betas_; }
  /// Position of beta in the ordering. Throws DomainError if out of range.
  std::size_t index_of(std::span<const unsigned> beta) const;

  friend bool operator==(const IndexOrder&, const IndexOrder&) = default;

 private:
  Prime p_ = 2;
  int m_ = 0;
  std::vector<std::vector<unsigned>> betas_;
};

struct WMatrix {
  Prime p = 2;
  int m = 0;
  int precision = 0;  // uniform entry precision
  IndexOrder order;
  std::size_t dim = 0;
  std::vector<PadicInt> entries;  // row-major, dim x dim

  const PadicInt& at(std::size_t alpha, std::size_t beta) const {
    return entries[alpha * dim + beta];
  }
};

WMatrix build_W(const RootSystem& rs, const IndexOrder& order);

struct DetCertificate {
  bool unit = false;
  unsigned det_mod_p = 0;
  /// v_p(det W) at the entry precision; value 0 when unit.
  Valuation valuation;
};

/// Determinant of W reduced mod p. A nonzero residue certifies det W is a unit.
DetCertificate det_unit_certificate(const WMatrix& w);

/// PA = LU over Z/p^N with unit pivots.
class UnitLuSolver {
 public:
  explicit UnitLuSolver(const WMatrix& w);

  std::size_t dim() const { return dim_; }
  int precision() const { return precision_; }

  /// x with W x = rhs mod p^{N_r}, where N_r is the common (minimum) rhs
  /// precision, capped at the factorization precision.
  std::vector<PadicInt> solve(std::span<const PadicInt> rhs) const;

 private:
  Prime p_;
  int precision_;
  std::size_t dim_;
  std::vector<std::size_t> perm_;   // row perm_[i] of W becomes row i
  std::vector<mpz_class> lu_;       // unit-lower L below diagonal, U on and above
  std::vector<mpz_class> pivot_inv_;
};

std::vector<PadicInt> solve_unit_system(const WMatrix& w, std::span<const PadicInt> rhs);

}  // namespace deltaop
