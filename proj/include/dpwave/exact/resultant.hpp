#pragma once

#include "dpwave/exact/poly.hpp"

// Sylvester resultants and discriminants by fraction-free (Bareiss)
// elimination over the exact coefficient ring.

namespace dpwave::exact {

// Fraction-free determinant.  M is row-major n x n; entries from any
// ring with exact division.
template <class T>
T bareiss_det(std::vector<std::vector<T>> M) {
  const std::size_t n = M.size();
  if (n == 0) return ring_one((T*)nullptr);
  T prev = ring_one((T*)nullptr);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(M[k][k])) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!is_zero(M[i][k])) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return ring_zero((T*)nullptr);
      std::swap(M[k], M[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        T q;
        if (!try_exact_div(num, prev, &q))
          throw Error(ErrorCode::zero_polynomial, "bareiss_det: non-exact division");
        M[i][j] = std::move(q);
      }
      M[i][k] = ring_zero((T*)nullptr);
    }
    prev = M[k][k];
  }
  T det = M[n - 1][n - 1];
  if (negate) det = ring_zero((T*)nullptr) - det;
  return det;
}

// Sylvester matrix of p (degree m) and q (degree n) in their outer
// variable; entries are the coefficients (type T).
template <class T>
std::vector<std::vector<T>> sylvester(const Poly<T>& p, const Poly<T>& q) {
  const int m = p.degree(), n = q.degree();
  if (m < 0 || n < 0)
    throw Error(ErrorCode::zero_polynomial, "sylvester: zero polynomial");
  const std::size_t sz = std::size_t(m + n);
  std::vector<std::vector<T>> M(sz, std::vector<T>(sz, ring_zero((T*)nullptr)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[std::size_t(r)][std::size_t(r + i)] = p.c[std::size_t(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      M[std::size_t(n + r)][std::size_t(r + i)] = q.c[std::size_t(n - i)];
  return M;
}

// Res(p, q) in the outer variable.  Zero polynomial input: resultant 0
// (matches the shared-root convention for degenerate cases).
template <class T>
T resultant(const Poly<T>& p, const Poly<T>& q) {
  if (p.zero() || q.zero()) return ring_zero((T*)nullptr);
  if (p.degree() == 0 && q.degree() == 0) return ring_one((T*)nullptr);
  if (p.degree() == 0) {
    T r = ring_one((T*)nullptr);
    for (int i = 0; i < q.degree(); ++i) r = r * p.lc();
    return r;
  }
  if (q.degree() == 0) {
    T r = ring_one((T*)nullptr);
    for (int i = 0; i < p.degree(); ++i) r = r * q.lc();
    return r;
  }
  return bareiss_det(sylvester(p, q));
}

// Disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p).
template <class T>
T discriminant(const Poly<T>& p) {
  const int n = p.degree();
  if (n < 2) throw Error(ErrorCode::out_of_range, "discriminant: degree must be >= 2");
  T res = resultant(p, derivative(p));
  T out;
  if (!try_exact_div(res, p.lc(), &out))
    throw Error(ErrorCode::zero_polynomial, "discriminant: lc division not exact");
  if ((std::size_t(n) * std::size_t(n - 1) / 2) % 2 == 1) out = ring_zero((T*)nullptr) - out;
  return out;
}

// Res in the outer variable of two bivariate polynomials (outer x,
// inner parameter), recovered by evaluating the parameter at integers
// and interpolating through the Sylvester degree bound.  Skips sample
// points where either leading coefficient vanishes.
QPoly resultant_param_interp(const BiPoly& p, const BiPoly& q);

}  // namespace dpwave::exact
