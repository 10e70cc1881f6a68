#pragma once

#include <map>
#include <vector>

#include "zhelo/linalg.hpp"
#include "zhelo/poly.hpp"
#include "zhelo/rootsys.hpp"

namespace zhelo {

// Divided difference A_i f = (f - s_i f)/h_i.  The numerator is always
// divisible by h_i; a failed division is a fatal internal error.
Poly bgg_apply(const RootSystem& rs, int i, const Poly& q);

// A_{i1} A_{i2} ... A_{ik} q (rightmost letter acts first).
Poly bgg_word_apply(const RootSystem& rs, const std::vector<int>& word, const Poly& q);

// Free homogeneous generators of the invariant ring, degrees m_i + 1.
// Built by Reynolds averaging of monomials, greedily keeping candidates
// that are independent of the subalgebra generated so far.
struct InvariantRing {
  std::vector<Poly> gens;
  std::vector<int> degrees;
};

InvariantRing invariant_generators(const RootSystem& rs);

// Graded reduction modulo L, the ideal generated by the positive-degree
// invariants.  Reduction data is built per degree on demand; each degree is
// cross-checked against the Poincare series of the coinvariant algebra.
class CoinvariantSpace {
 public:
  CoinvariantSpace(const RootSystem& rs, const InvariantRing& inv);

  void ensure_degree(int d);
  Poly reduce(const Poly& q);           // canonical representative mod L
  bool is_zero_class(const Poly& q) { return reduce(q).is_zero(); }
  int dim(int d);                       // dim of the degree-d piece
  int expected_dim(int d) const;        // coefficient of the Poincare product
  int top_degree() const { return rs_->num_positive(); }

  const std::vector<Expo>& monomials(int d);
  // Coordinates of a reduced degree-d representative on the non-pivot monomials.
  RatVec coords(const Poly& reduced, int d);

 private:
  struct DegreeData {
    bool built = false;
    std::vector<Expo> monos;
    std::map<Expo, int> index;
    RatRows echelon;              // reduced rows spanning L_d
    std::vector<int> pivot_col;
    std::vector<int> nonpivot;
  };

  const RootSystem* rs_;
  const InvariantRing* inv_;
  std::vector<int> poincare_;
  std::vector<DegreeData> data_;
};

// Word of length deg(f) sending the nonzero class f to a nonzero scalar,
// found greedily; bgg_word_apply(word, f) is that scalar.
std::vector<int> find_killing_word(const RootSystem& rs, CoinvariantSpace& cs, const Poly& f);

// All monomial exponent vectors of the given total degree, in grlex order.
std::vector<Expo> monomials_of_degree(int nvars, int d);

}  // namespace zhelo
