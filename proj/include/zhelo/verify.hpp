#pragma once

#include <string>
#include <vector>

#include "zhelo/chevalley.hpp"
#include "zhelo/monoid.hpp"
#include "zhelo/zhelobenko.hpp"

namespace zhelo {

// ad(e)^{m+1} kills the gradient vector of every invariant generator of
// degree m+1, evaluated on the rho-line with a formal parameter.
struct SymmetricReport {
  struct Item {
    int m;                // generator degree minus one
    int minimal_power;    // least k with ad(e)^k v = 0
    bool pass;            // minimal_power <= m+1
  };
  std::vector<Item> items;
  bool ok() const;
};

SymmetricReport check_symmetric_kostant(const RootSystem& rs, const ChevalleyBasis& cb,
                                        const InvariantRing& ring);

// The headline statement for the Zhelobenko generators: for J of degree m,
// ad(e)^{m+1} (sum_i pi_i q_i(s rho)) = 0 identically in s, along with the
// leading-term corollary and the translation-invariance of the check.
struct AnalogueReport {
  struct Item {
    int m;
    int minimal_power;
    bool pass_main;      // on the q_i
    bool pass_leading;   // on the leading terms P0_i
    bool pass_translate; // on the P_i (theta-shifted normalization)
  };
  std::vector<Item> items;
  bool ok() const;
};

AnalogueReport check_analogue_kostant(const RootSystem& rs, const ChevalleyBasis& cb,
                                      const std::vector<ZheloInvariant>& gens);

// Descent of the evaluated tables along the levels: at each level the
// corrected values must be proportional to the leading-term values with
// ratio picking up (1+sr)/(sr).  Corrections use lower-degree generator
// tables through the kernel coordinates.
struct Eq24Report {
  int m = 0;
  bool pass = false;
  std::vector<int> adjusted_levels;  // levels where a kernel correction was applied
  RatFn1 final_ratio;                // c_1
  std::vector<std::string> notes;
};

Eq24Report adjust_and_check_eq24(const RootSystem& rs, const ChevalleyBasis& cb,
                                 const std::vector<ZheloInvariant>& gens, int m);
// Same descent for an explicitly chosen generator (needed when an exponent
// carries more than one).
Eq24Report adjust_and_check_eq24(const RootSystem& rs, const ChevalleyBasis& cb,
                                 const std::vector<ZheloInvariant>& gens,
                                 const ZheloInvariant& main_gen);

// Number of generator tuples of each degree matches n_{r-1} - n_r, and the
// level-(r-1) scalar vectors of those tuples are linearly independent.
struct CountReport {
  bool pass = false;
  std::vector<std::string> notes;
};

CountReport check_generator_counting(const RootSystem& rs, const ChevalleyBasis& cb,
                                     const std::vector<ZheloInvariant>& gens);

}  // namespace zhelo
