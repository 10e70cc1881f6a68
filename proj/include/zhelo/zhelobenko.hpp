#pragma once

#include <string>
#include <vector>

#include "zhelo/bgg.hpp"
#include "zhelo/poly.hpp"
#include "zhelo/rootsys.hpp"

namespace zhelo {

// A Zhelobenko invariant of the adjoint module, J = sum_i pi_i (x) q_i,
// together with the divided tuple P_i = theta^{-1}(q_i / (h_i + 2)).
struct ZheloInvariant {
  int m = 0;             // common degree of the q_i
  std::vector<Poly> P;   // degree m-1
  std::vector<Poly> P0;  // leading homogeneous parts of P
  std::vector<Poly> q;   // q_i = (h_i + 2) theta(P_i)
};

// xi_i applied to sum_j pi_j (x) q_j, with denominators h_i:
//   component i:      -(h_i+2)/h_i * s_i.q_i
//   component j != i:  s_i.q_j - a[j][i] (h_i+1)/h_i * s_i.q_i
std::vector<RatFn> xi_apply(const RootSystem& rs, int i, const std::vector<Poly>& q);

struct InvarianceReport {
  bool fixed_point = false;     // h_i (xi_i(J) - J) = 0 for all i
  bool divisibility = false;    // every q_i divisible by h_i + 2
  bool recurrence = false;      // cleared divided-difference rule for the tuple
  std::vector<std::string> residuals;
  bool invariant() const { return fixed_point; }
};

// Runs both invariance criteria and insists that they agree.
InvarianceReport check_invariant(const RootSystem& rs, const std::vector<Poly>& q);

// q_i -> theta^{-1}(q_i/(h_i+2)); faults when the division is not exact.
std::vector<Poly> extract_P(const RootSystem& rs, const std::vector<Poly>& q);

// Residual of the cleared recurrence
//   (1 + s_i(h_j)) A_i P_j - a[j][i] (P_i - P_j)
Poly recurrence_residual(const RootSystem& rs, const std::vector<Poly>& P, int i, int j);
bool recurrence_holds(const RootSystem& rs, const std::vector<Poly>& P);

// Builds J from a solution tuple; rejects tuples violating the recurrence,
// and the result is checked to be a xi fixed point.
ZheloInvariant assemble_invariant(const RootSystem& rs, const std::vector<Poly>& P);

// One generator invariant per exponent (with multiplicity), of degree m,
// with the leading terms of the P-tuple pinned to the divided gradient of
// the corresponding invariant-ring generator.  Lower-order terms are found
// by exact linear solves degree by degree.
std::vector<ZheloInvariant> solve_generators(const RootSystem& rs, const InvariantRing& ring);

}  // namespace zhelo
