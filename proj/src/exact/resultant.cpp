#include "dpwave/exact/resultant.hpp"

namespace dpwave::exact {

QPoly resultant_param_interp(const BiPoly& p, const BiPoly& q) {
  const int dp = p.degree(), dq = q.degree();
  if (dp < 0 || dq < 0) return {};
  const int bp = bipoly_param_degree(p), bq = bipoly_param_degree(q);
  // each of the dq rows built from p carries parameter degree <= bp, etc.
  const long bound = long(dq) * bp + long(dp) * bq;
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  long e = 0;
  while (long(xs.size()) < bound + 1) {
    const Rat v(e);
    // alternate 0, 1, -1, 2, -2, ...
    e = e > 0 ? -e : -e + 1;
    if (is_zero(eval_at(p.lc(), v)) || is_zero(eval_at(q.lc(), v)))
      continue;  // degree would drop; the specialization would not match
    QPoly pe = bipoly_at_param(p, v);
    QPoly qe = bipoly_at_param(q, v);
    xs.push_back(v);
    ys.push_back(resultant(pe, qe));
  }
  QPoly out = newton_interpolate(xs, ys);
  return out;
}

}  // namespace dpwave::exact
