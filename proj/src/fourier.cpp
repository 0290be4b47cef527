#include "dpwave/fourier.hpp"

#include <cmath>

#include "dpwave/errors.hpp"
#include "dpwave/simd.hpp"

namespace dpwave {

std::vector<double> cos_coeffs(const std::vector<double>& f, int m_max) {
  const int n = int(f.size());
  std::vector<double> a(m_max + 1, 0.0);
  a[0] = simd::sum(f.data(), n) / n;
  std::vector<double> table(n);
  for (int m = 1; m <= m_max; ++m) {
    for (int i = 0; i < n; ++i) table[i] = std::cos(2.0 * M_PI * m * i / n);
    a[m] = 2.0 / n * simd::dot(f.data(), table.data(), n);
  }
  return a;
}

SymMatrix mult_cos_block(const std::vector<double>& a, int K) {
  if (int(a.size()) < 2 * K + 1)
    throw Error(ErrorCode::out_of_range, "mult_cos_block: need coefficients up to 2K");
  SymMatrix M(K + 1);
  M.at(0, 0) = a[0];
  for (int k = 1; k <= K; ++k) {
    M.at(0, k) = a[k] / std::sqrt(2.0);
    M.at(k, 0) = M.at(0, k);
  }
  for (int j = 1; j <= K; ++j)
    for (int k = j; k <= K; ++k) {
      const double v = (j == k) ? a[0] + 0.5 * a[2 * k] : 0.5 * (a[k - j] + a[k + j]);
      M.at(j, k) = v;
      M.at(k, j) = v;
    }
  return M;
}

SymMatrix mult_sin_block(const std::vector<double>& a, int K) {
  if (int(a.size()) < 2 * K + 1)
    throw Error(ErrorCode::out_of_range, "mult_sin_block: need coefficients up to 2K");
  SymMatrix M(K);
  for (int j = 1; j <= K; ++j)
    for (int k = j; k <= K; ++k) {
      const double v = (j == k) ? a[0] - 0.5 * a[2 * k] : 0.5 * (a[k - j] - a[k + j]);
      M.at(j - 1, k - 1) = v;
      M.at(k - 1, j - 1) = v;
    }
  return M;
}

namespace {

// Real DFT pair on an n-point periodic grid (n even): f(x_i) =
// A_0 + sum_{k=1}^{n/2-1} [A_k cos + B_k sin](k w x_i) + A_{n/2} cos(.)
void real_dft(const std::vector<double>& f, std::vector<double>& A, std::vector<double>& B) {
  const int n = int(f.size());
  const int half = n / 2;
  A.assign(half + 1, 0.0);
  B.assign(half + 1, 0.0);
  std::vector<double> ct(n), st(n);
  for (int k = 0; k <= half; ++k) {
    for (int i = 0; i < n; ++i) {
      const double t = 2.0 * M_PI * k * i / n;
      ct[i] = std::cos(t);
      st[i] = std::sin(t);
    }
    const double scale = (k == 0 || k == half) ? 1.0 / n : 2.0 / n;
    A[k] = scale * simd::dot(f.data(), ct.data(), n);
    B[k] = scale * simd::dot(f.data(), st.data(), n);
  }
}

}  // namespace

std::vector<double> apply_even_symbol(const std::vector<double>& f, double L,
                                      const std::function<double(double)>& symbol) {
  const int n = int(f.size());
  const int half = n / 2;
  const double w = 2.0 * M_PI / L;
  std::vector<double> A, B;
  real_dft(f, A, B);
  std::vector<double> out(n, 0.0);
  for (int k = 0; k <= half; ++k) {
    const double m = symbol(k * w);
    A[k] *= m;
    B[k] *= m;
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k <= half; ++k) {
      const double t = 2.0 * M_PI * k * i / n;
      s += A[k] * std::cos(t) + B[k] * std::sin(t);
    }
    out[i] = s;
  }
  return out;
}

std::vector<double> spectral_derivative(const std::vector<double>& f, double L) {
  const int n = int(f.size());
  const int half = n / 2;
  const double w = 2.0 * M_PI / L;
  std::vector<double> A, B;
  real_dft(f, A, B);
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 1; k < half; ++k) {  // the Nyquist cosine differentiates to zero on the grid
      const double t = 2.0 * M_PI * k * i / n;
      s += k * w * (-A[k] * std::sin(t) + B[k] * std::cos(t));
    }
    out[i] = s;
  }
  return out;
}

}  // namespace dpwave
