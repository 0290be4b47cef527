#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dpwave/errors.hpp"

// Exact polynomial arithmetic over Q in one or more variables, built as
// dense polynomials with recursively polynomial coefficients.  All
// operations are exact; nothing here ever rounds.

namespace dpwave::exact {

using Int = mpz_class;
using Rat = mpq_class;

// ---- ring scalars ----------------------------------------------------------

inline bool is_zero(const Rat& r) { return r == 0; }
inline Rat ring_zero(const Rat*) { return Rat(0); }
inline Rat ring_one(const Rat*) { return Rat(1); }

inline bool try_exact_div(const Rat& a, const Rat& b, Rat* out) {
  if (b == 0) return false;
  *out = a / b;
  return true;
}

// Exact square root of a rational, if it exists.
std::optional<Rat> sqrt_exact(const Rat& r);

// ---- dense polynomial template ---------------------------------------------

template <class T>
struct Poly {
  std::vector<T> c;  // ascending powers; normalized: no zero leading coeff

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
  const T& lc() const { return c.back(); }
  T coeff(int k) const {
    if (k < 0 || k >= int(c.size())) return ring_zero((T*)nullptr);
    return c[std::size_t(k)];
  }
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.zero();
}
template <class T>
Poly<T> ring_zero(const Poly<T>*) {
  return Poly<T>{};
}
template <class T>
Poly<T> ring_one(const Poly<T>*) {
  Poly<T> p;
  p.c.push_back(ring_one((T*)nullptr));
  return p;
}

template <class T>
bool operator==(const Poly<T>& a, const Poly<T>& b) {
  return a.c == b.c;
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), ring_zero((T*)nullptr));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
  r.normalize();
  return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
  Poly<T> r = a;
  for (auto& x : r.c) x = ring_zero((T*)nullptr) - x;
  return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  return a + (-b);
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.zero() || b.zero()) return {};
  Poly<T> r;
  r.c.assign(a.c.size() + b.c.size() - 1, ring_zero((T*)nullptr));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (is_zero(b.c[j])) continue;
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
  }
  r.normalize();
  return r;
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& s) {
  Poly<T> r = a;
  for (auto& x : r.c) x = x * s;
  r.normalize();
  return r;
}

// scalar (rational) scaling of arbitrarily nested polynomials
inline Rat scale_rat(const Rat& a, const Rat& s) { return a * s; }
template <class T>
Poly<T> scale_rat(const Poly<T>& a, const Rat& s) {
  Poly<T> r = a;
  for (auto& x : r.c) x = scale_rat(x, s);
  r.normalize();
  return r;
}

template <class T>
Poly<T> pow(const Poly<T>& a, int k) {
  Poly<T> r = ring_one((Poly<T>*)nullptr);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  Poly<T> r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = scale_rat(a.c[i], Rat(long(i)));
  r.normalize();
  return r;
}

// Evaluation of Poly<T> at a T value.
template <class T>
T eval_at(const Poly<T>& p, const T& x) {
  T acc = ring_zero((T*)nullptr);
  for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

// Division with the requirement that it is exact over the coefficient
// ring; returns false when any coefficient division fails or a nonzero
// remainder survives.
template <class T>
bool try_exact_div(const Poly<T>& a, const Poly<T>& b, Poly<T>* out) {
  if (b.zero()) return false;
  Poly<T> rem = a;
  Poly<T> quot;
  if (a.zero()) {
    *out = quot;
    return true;
  }
  if (rem.degree() < b.degree()) return false;
  quot.c.assign(std::size_t(rem.degree() - b.degree()) + 1, ring_zero((T*)nullptr));
  while (!rem.zero() && rem.degree() >= b.degree()) {
    T q;
    if (!try_exact_div(rem.lc(), b.lc(), &q)) return false;
    const int shift = rem.degree() - b.degree();
    quot.c[std::size_t(shift)] = q;
    // rem -= q x^shift * b
    for (int i = 0; i <= b.degree(); ++i) {
      std::size_t k = std::size_t(i + shift);
      rem.c[k] = rem.c[k] - q * b.c[std::size_t(i)];
    }
    rem.normalize();
    if (!rem.zero() && rem.degree() >= b.degree() + shift) return false;  // no progress
  }
  if (!rem.zero()) return false;
  quot.normalize();
  *out = quot;
  return true;
}

template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> q;
  if (!try_exact_div(a, b, &q))
    throw Error(ErrorCode::zero_polynomial, "exact_div: polynomials do not divide exactly");
  return q;
}

// Exact square root of a perfect-square polynomial (lc of the root made
// "positive" by the recursive scalar convention).
template <class T>
std::optional<Poly<T>> poly_sqrt(const Poly<T>& p);

template <class T>
std::optional<Poly<T>> sqrt_exact(const Poly<T>& p) {
  return poly_sqrt(p);
}

template <class T>
std::optional<Poly<T>> poly_sqrt(const Poly<T>& p) {
  if (p.zero()) return Poly<T>{};
  const int d = p.degree();
  if (d % 2 != 0) return std::nullopt;
  const int m = d / 2;
  auto lead = sqrt_exact(p.lc());
  if (!lead) return std::nullopt;
  Poly<T> t;
  t.c.assign(std::size_t(m) + 1, ring_zero((T*)nullptr));
  t.c[std::size_t(m)] = *lead;
  const T two = ring_one((T*)nullptr) + ring_one((T*)nullptr);
  for (int j = m - 1; j >= 0; --j) {
    // p_{m+j} = 2 t_m t_j + sum_{i=j+1}^{m-1} t_i t_{m+j-i}
    T acc = p.coeff(m + j);
    for (int i = j + 1; i <= m - 1; ++i) {
      const int k = m + j - i;
      if (k > m || k < 0) continue;
      acc = acc - t.c[std::size_t(i)] * t.c[std::size_t(k)];
    }
    T denom = two * t.c[std::size_t(m)];
    T q;
    if (!try_exact_div(acc, denom, &q)) return std::nullopt;
    t.c[std::size_t(j)] = q;
  }
  t.normalize();
  if (!(t * t == p)) return std::nullopt;
  return t;
}

// k-th root for k in {2, 4} by iterated square roots.
template <class T>
std::optional<Poly<T>> poly_kth_root(const Poly<T>& p, int k) {
  if (k == 2) return poly_sqrt(p);
  if (k == 4) {
    auto s = poly_sqrt(p);
    if (!s) return std::nullopt;
    auto r = poly_sqrt(*s);
    if (r) return r;
    return poly_sqrt(-*s);  // the inner sqrt may need the other sign
  }
  throw Error(ErrorCode::out_of_range, "poly_kth_root: k must be 2 or 4");
}

// ---- common aliases ---------------------------------------------------------

using QPoly = Poly<Rat>;          // univariate over Q
using BiPoly = Poly<QPoly>;       // main variable outer, parameter inner
using TriPoly = Poly<BiPoly>;     // three variables, outermost first

// Newton interpolation through (xs[i], ys[i]); V is any Q-module with
// +, -, and scale_rat.  Returns the polynomial in the new (outer)
// variable with V coefficients.
template <class V>
Poly<V> newton_interpolate(const std::vector<Rat>& xs, const std::vector<V>& ys) {
  const std::size_t n = xs.size();
  std::vector<V> dd = ys;  // divided differences, built in place
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      Rat dx = xs[i] - xs[i - j];
      dd[i] = scale_rat(dd[i] - dd[i - 1], Rat(1) / dx);
      if (i == j) break;
    }
  // expand the Newton form to monomial coefficients
  Poly<V> acc;
  for (std::size_t i = n; i-- > 0;) {
    // acc = acc * (X - xs[i]) + dd[i]
    Poly<V> shifted;
    shifted.c.assign(acc.c.size() + 1, ring_zero((V*)nullptr));
    for (std::size_t k = 0; k < acc.c.size(); ++k) {
      shifted.c[k + 1] = shifted.c[k + 1] + acc.c[k];
      shifted.c[k] = shifted.c[k] - scale_rat(acc.c[k], xs[i]);
    }
    if (shifted.c.empty()) shifted.c.push_back(ring_zero((V*)nullptr));
    shifted.c[0] = shifted.c[0] + dd[i];
    shifted.normalize();
    acc = std::move(shifted);
  }
  return acc;
}

// ---- univariate helpers over Q ----------------------------------------------

QPoly qpoly(std::initializer_list<Rat> ascending);
QPoly qpoly_linear(const Rat& a0, const Rat& a1);  // a0 + a1 x

// gcd (monic) of univariate rational polynomials
QPoly qpoly_gcd(QPoly a, QPoly b);

// evaluation of a BiPoly (outer x, inner parameter) at a parameter value
QPoly bipoly_at_param(const BiPoly& p, const Rat& value);

// max degree in the inner parameter across coefficients
int bipoly_param_degree(const BiPoly& p);

std::string to_string(const Rat& r);
std::string to_string(const QPoly& p, const char* var = "x");
std::string to_string(const BiPoly& p, const char* var = "x", const char* param = "t");

}  // namespace dpwave::exact
