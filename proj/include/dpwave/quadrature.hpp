#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dpwave {

// Gauss-Legendre rule on [-1, 1].  Rules are cached per node count.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

struct QuadResult {
  double value = 0.0;
  int nodes = 0;       // node count of the accepted rule
  double change = 0.0; // |last doubling change|
};

// Integrates a smooth f over [a, b], doubling the node count from
// `n_start` until two successive values agree to rel_tol (relative to
// the integral magnitude), up to n_max nodes.  Throws NonConvergence
// when n_max nodes still disagree.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int n_start = 32, int n_max = 4096);

// One fixed-order pass.
double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace dpwave
