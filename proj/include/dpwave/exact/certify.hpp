#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dpwave/exact/poly.hpp"

// Machine certificates for the polynomial claims behind the period
// monotonicity lemmas: discriminants, resultants, Sturm root isolation,
// and polynomial fourth roots, all in exact rational arithmetic.

namespace dpwave::exact {

struct Certificate {
  std::string claim_id;
  std::string status;  // "verified" | "failed" | "out-of-scope"
  std::string first_failed;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  double wall_time = 0.0;
};

// Claim registry: C1..C9.
const std::vector<std::string>& certificate_claims();

Certificate certify(const std::string& claim_id);

nlohmann::ordered_json certificate_to_json(const Certificate& c);

// ---- the fixed polynomials of the eta-parametrized center ------------------
// (outer variable x, inner parameter eta)

BiPoly poly_R_eta();      // degree 6 numerator factor of W''
BiPoly poly_D_eta();      // cubic denominator factor of W''
BiPoly poly_NVp_eta();    // numerator of V' over (eta - x)^3
BiPoly poly_AV_eta();     // numerator of V over 2 (eta - x)^2
BiPoly poly_P_eta();      // Res_y(V'(y), V(y) - V(x)), cleared of denominators

// ---- the theta-parametrized pipeline (Lemmas on ell(h)) ---------------------

// Degree-10 polynomial R(x; theta) whose root count on the sigma-balance
// interval bounds the number of critical periods; recovered exactly from
// the balance locus ell1(x) = ell1(y) against the involution polynomial
// S(x, y).  Computed once per process.
const BiPoly& lemma_R10();

}  // namespace dpwave::exact
