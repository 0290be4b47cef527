#include "dpwave/exact/poly.hpp"

#include <sstream>

namespace dpwave::exact {

std::optional<Rat> sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  const Int num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int ns, ds;
  mpz_sqrt(ns.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(ds.get_mpz_t(), den.get_mpz_t());
  return Rat(ns) / Rat(ds);
}

QPoly qpoly(std::initializer_list<Rat> ascending) { return QPoly(std::vector<Rat>(ascending)); }

QPoly qpoly_linear(const Rat& a0, const Rat& a1) { return qpoly({a0, a1}); }

QPoly qpoly_gcd(QPoly a, QPoly b) {
  auto monic = [](QPoly p) {
    if (!p.zero()) p = scale(p, Rat(Rat(1) / p.lc()));
    return p;
  };
  a = monic(a);
  b = monic(b);
  while (!b.zero()) {
    // remainder of a by b
    QPoly r = a;
    while (!r.zero() && r.degree() >= b.degree()) {
      const Rat q = r.lc() / b.lc();
      const int shift = r.degree() - b.degree();
      for (int i = 0; i <= b.degree(); ++i)
        r.c[std::size_t(i + shift)] = r.c[std::size_t(i + shift)] - q * b.c[std::size_t(i)];
      r.c.pop_back();
      r.normalize();
    }
    a = b;
    b = monic(r);
  }
  return a;
}

QPoly bipoly_at_param(const BiPoly& p, const Rat& value) {
  QPoly out;
  out.c.resize(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) out.c[i] = eval_at(p.c[i], value);
  out.normalize();
  return out;
}

int bipoly_param_degree(const BiPoly& p) {
  int d = -1;
  for (const auto& q : p.c) d = std::max(d, q.degree());
  return d;
}

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {
void append_term(std::ostringstream& os, bool* first, const std::string& coeff,
                 const char* var, std::size_t power) {
  if (!*first) os << " + ";
  *first = false;
  os << coeff;
  if (power >= 1) os << "*" << var;
  if (power >= 2) os << "^" << power;
}
}  // namespace

std::string to_string(const QPoly& p, const char* var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    append_term(os, &first, p.c[i].get_str(), var, i);
  }
  return os.str();
}

std::string to_string(const BiPoly& p, const char* var, const char* param) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i].zero()) continue;
    append_term(os, &first, "(" + to_string(p.c[i], param) + ")", var, i);
  }
  return os.str();
}

}  // namespace dpwave::exact
