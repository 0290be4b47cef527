#pragma once

#include <functional>
#include <vector>

#include "dpwave/jacobi.hpp"

// Real trigonometric calculus on uniform periodic grids.  Profiles are
// even, so multiplication operators decouple into cosine and sine
// blocks in the orthonormal basis
//   {1/sqrt(L), sqrt(2/L) cos(k w x), sqrt(2/L) sin(k w x)},  w = 2 pi / L.

namespace dpwave {

// Cosine-series coefficients a_0..a_mmax of even periodic grid data:
// f(x) = a_0 + sum_m a_m cos(m w x).
std::vector<double> cos_coeffs(const std::vector<double>& f, int m_max);

// (K+1)x(K+1) block <e_j^c, v e_k^c> of multiplication by v, where `a`
// are the cosine coefficients of v (needs a.size() > 2K).
SymMatrix mult_cos_block(const std::vector<double>& a, int K);

// K x K block <e_j^s, v e_k^s>, j,k = 1..K.
SymMatrix mult_sin_block(const std::vector<double>& a, int K);

// Applies the Fourier multiplier m(xi) (even symbol) to periodic grid
// data: out_hat(k) = m(k w) f_hat(k).
std::vector<double> apply_even_symbol(const std::vector<double>& f, double L,
                                      const std::function<double(double)>& symbol);

// Spectral derivative of periodic grid data.
std::vector<double> spectral_derivative(const std::vector<double>& f, double L);

}  // namespace dpwave
