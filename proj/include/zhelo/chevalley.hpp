#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhelo/linalg.hpp"
#include "zhelo/poly.hpp"
#include "zhelo/rootsys.hpp"

namespace zhelo {

// Chevalley basis of the Langlands dual algebra.  Its roots are the coroots
// of the input system; its Cartan basis t_j = [x_{a_j}, x_{-a_j}] is spanned
// by the simple roots of the input system.
//
// Signs are fixed by the extraspecial-pair convention under the
// height-then-lex order on positive roots; everything downstream is tested
// to be robust against this choice.
//
// Signed root indices: k in [0, npos) is the k-th positive root of `dual`,
// and npos + k is its negative.
struct ChevalleyBasis {
  RootSystem dual;  // root system on the transposed Cartan matrix
  int npos = 0;
  std::vector<std::vector<long long>> n_table;  // N over signed index pairs

  int negate(int a) const { return a < npos ? a + npos : a - npos; }
  bool is_positive(int a) const { return a < npos; }
  IVec signed_vector(int a) const;
  std::optional<int> signed_index(const IVec& v) const;
  long long n_of(int a, int b) const { return n_table[a][b]; }
  long long n_of_vec(const IVec& x, const IVec& y) const;
  // N_{-alpha_i, gamma} for a simple index i and a positive root index g.
  long long n_minus_simple(int i, int g) const { return n_table[npos + i][g]; }
  int height(int g) const { return dual.root_height[g]; }
};

ChevalleyBasis build_chevalley(const RootSystem& rs);

// Element of the dual algebra; coefficients are univariate polynomials so
// the principal nilpotent can act on vectors depending on the formal
// evaluation parameter.
struct DualElement {
  std::vector<Poly> cartan;  // coordinates over t_j
  std::map<int, Poly> root;  // signed root index -> coefficient

  bool is_zero() const;
};

DualElement dual_zero(const ChevalleyBasis& cb);
DualElement bracket(const ChevalleyBasis& cb, const DualElement& x, const DualElement& y);
DualElement add(const DualElement& x, const DualElement& y);
DualElement scale(const DualElement& x, const Rat& c);

// Principal nilpotents e = sum of simple root vectors, f = sum of their
// negatives.
DualElement principal_e(const ChevalleyBasis& cb);
DualElement principal_f(const ChevalleyBasis& cb);

// ad(x)^k v by bracket expansion; k >= 0.
DualElement ad_power(const ChevalleyBasis& cb, const DualElement& x, const DualElement& v, int k);
// Smallest k <= cap with ad(x)^k v = 0, or cap+1 if none.
int nilpotency_index(const ChevalleyBasis& cb, const DualElement& x, const DualElement& v, int cap);

// Cartan element whose fundamental-weight coordinates are the given
// coefficients: sum_i coeffs[i] * pi_i expanded over the t_j through the
// inverse Cartan matrix of rs.
DualElement embed_weight_vector(const ChevalleyBasis& cb, const RootSystem& rs,
                                const std::vector<Poly>& coeffs);

struct IdentityReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The structure-constant identity battery (antisymmetry consequences of the
// Jacobi identity for pairs involving simple roots); not applicable to G2.
IdentityReport verify_72_identities(const ChevalleyBasis& cb);
// Jacobi over all basis triples.
IdentityReport verify_jacobi(const ChevalleyBasis& cb);

// Indices of the dual positive roots of height r, ascending.
std::vector<int> roots_at_level(const ChevalleyBasis& cb, int r);

// Matrix with rows alpha in pi and columns the height-r coroots, entries
// N_{-alpha, gamma}; its rank equals the number of height-r coroots.
RatRows build_Mr(const ChevalleyBasis& cb, int r);

// Level-transfer map X_{r-1} -> X_r: (T z)_gamma = sum_alpha
// N_{-alpha,gamma} z_{gamma-alpha}; the kernel has dimension
// n_{r-1} - n_r.
RatRows level_transfer(const ChevalleyBasis& cb, int r);

// Dimension jumps of ker ad(e)^k on the whole algebra match the principal
// string lengths {2 m_i + 1}.
bool principal_string_check(const ChevalleyBasis& cb, const std::vector<int>& exponents);

// Structure-constant table as JSON rows {beta, gamma, N}, for golden tests.
std::string structure_constants_json(const ChevalleyBasis& cb);

}  // namespace zhelo
