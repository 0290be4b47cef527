#include "dpwave/exact/sturm.hpp"

namespace dpwave::exact {

namespace {

// remainder of a by b over Q
QPoly qpoly_rem(QPoly a, const QPoly& b) {
  while (!a.zero() && a.degree() >= b.degree()) {
    const Rat q = a.lc() / b.lc();
    const int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i)
      a.c[std::size_t(i + shift)] = a.c[std::size_t(i + shift)] - q * b.c[std::size_t(i)];
    a.c.pop_back();
    a.normalize();
  }
  return a;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

SturmChain sturm_chain(const QPoly& p) {
  if (p.zero()) throw Error(ErrorCode::zero_polynomial, "sturm_chain: zero polynomial");
  SturmChain ch;
  ch.seq.push_back(p);
  QPoly d = derivative(p);
  if (d.zero()) return ch;
  ch.seq.push_back(d);
  while (true) {
    const QPoly& s0 = ch.seq[ch.seq.size() - 2];
    const QPoly& s1 = ch.seq[ch.seq.size() - 1];
    QPoly r = qpoly_rem(s0, s1);
    if (r.zero()) break;
    ch.seq.push_back(-r);
  }
  return ch;
}

int sign_variations(const SturmChain& chain, const Rat& x) {
  int vars = 0, last = 0;
  for (const QPoly& s : chain.seq) {
    const int sg = sign_of(eval_at(s, x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++vars;
    last = sg;
  }
  return vars;
}

int sturm_count(const QPoly& p, const Rat& lo, const Rat& hi, int* endpoint_deflations) {
  if (p.zero()) throw Error(ErrorCode::zero_polynomial, "sturm_count: zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::out_of_range, "sturm_count: need lo < hi");
  QPoly q = p;
  int deflations = 0;
  while (!q.zero() && q.degree() >= 1 && eval_at(q, lo) == 0) {
    q = exact_div(q, qpoly({-lo, Rat(1)}));
    ++deflations;
  }
  while (!q.zero() && q.degree() >= 1 && eval_at(q, hi) == 0) {
    q = exact_div(q, qpoly({-hi, Rat(1)}));
    ++deflations;
  }
  if (endpoint_deflations) *endpoint_deflations = deflations;
  if (q.degree() < 1) return 0;
  SturmChain ch = sturm_chain(q);
  return sign_variations(ch, lo) - sign_variations(ch, hi);
}

Rat cauchy_bound(const QPoly& p) {
  if (p.zero()) throw Error(ErrorCode::zero_polynomial, "cauchy_bound: zero polynomial");
  Rat maxr(0);
  const Rat lead = abs(p.lc());
  for (int i = 0; i < p.degree(); ++i) {
    Rat v = abs(p.coeff(i)) / lead;
    if (v > maxr) maxr = v;
  }
  return maxr + 1;
}

int sturm_count_all(const QPoly& p) {
  if (p.degree() < 1) return 0;
  const Rat b = cauchy_bound(p);
  return sturm_count(p, -b, b);
}

RootBox isolate_root(const QPoly& p, Rat lo, Rat hi, const Rat& width) {
  if (sturm_count(p, lo, hi) != 1)
    throw Error(ErrorCode::out_of_range, "isolate_root: interval does not isolate one root");
  while (hi - lo > width) {
    const Rat mid = (lo + hi) / 2;
    if (eval_at(p, mid) == 0) {
      // land the box around an exact rational root
      const Rat w = width / 2;
      return {mid - w, mid + w};
    }
    if (sturm_count(p, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace dpwave::exact
