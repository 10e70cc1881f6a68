#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zhelo/rat.hpp"

namespace zhelo {

// Integer coordinate vector over the simple roots (or simple coroots).
using IVec = std::vector<long long>;

// Cartan datum in the convention a[i][j] = alpha_j(h_i), h_i the i-th
// simple coroot.  Every pairing formula in the project goes through this
// single convention.
//
// Labelling: Bourbaki for A-E and G2; in types B/C the last simple root is
// the one of distinct length; F4 is labelled in reverse so that the first
// two simple coroots are the long ones.
struct CartanDatum {
  char family = 'A';
  int rank = 1;
  std::vector<std::vector<int>> a;  // a[i][j] = alpha_j(h_i)
  std::vector<int> d;               // symmetrizer: d[i]*a[i][j] = d[j]*a[j][i]

  std::string tag() const { return std::string(1, family) + std::to_string(rank); }
};

CartanDatum cartan_datum(char family, int rank);
CartanDatum parse_type(const std::string& tag);

// Weyl group element: a word in the simple reflections together with its
// matrix acting on coroot coordinates.
struct WeylElement {
  std::vector<int> word;
  std::vector<std::vector<long long>> mat;
};

struct RootSystem {
  CartanDatum datum;
  int rank = 0;

  // Positive roots paired with their coroots: coroots[k] is the coroot of
  // roots[k].  Sorted by (root height, lex), so in particular the simple
  // roots come first in index order.
  std::vector<IVec> roots;    // simple-root coordinates
  std::vector<IVec> coroots;  // simple-coroot coordinates

  std::vector<int> root_height;
  std::vector<int> coroot_height;
  int highest_root_index = -1;    // unique root of maximal height
  int highest_coroot_index = -1;  // unique coroot of maximal height

  // n[r] = number of positive coroots of height r (n[0] unused).
  std::vector<int> coroot_level_count;
  std::vector<int> exponents_;  // increasing

  // ---- pairings -------------------------------------------------------
  // alpha_i(v) for v a vector in simple-coroot coordinates.
  long long simple_root_on_coroot(int i, const IVec& v) const;
  // gamma(h_j) for gamma in simple-root coordinates.
  long long root_on_simple_coroot(const IVec& gamma, int j) const;

  // ---- reflections ----------------------------------------------------
  IVec reflect_coroot(int j, const IVec& v) const;  // s_j(v), coroot coords
  IVec reflect_root(int j, const IVec& v) const;    // s_j(v), root coords

  // ---- lookups --------------------------------------------------------
  std::optional<int> positive_coroot_index(const IVec& v) const;
  std::optional<int> positive_root_index(const IVec& v) const;
  bool is_coroot(const IVec& v) const;  // positive or negative
  bool is_root(const IVec& v) const;

  // Squared lengths; only ratios are ever used.  In a simply-laced system
  // every root and coroot counts as long.
  Rat coroot_norm2(const IVec& v) const;
  Rat root_norm2(const IVec& v) const;
  bool coroot_is_short(const IVec& v) const;
  bool root_is_short(const IVec& v) const;
  bool simply_laced() const;

  const std::vector<int>& exponents() const { return exponents_; }
  int num_positive() const { return static_cast<int>(roots.size()); }

  // ---- Weyl group -----------------------------------------------------
  std::vector<std::vector<long long>> simple_matrix(int j) const;
  WeylElement element_from_word(const std::vector<int>& word) const;
  // Full enumeration (words + matrices), built lazily and cached.
  const std::vector<WeylElement>& weyl_elements() const;
  std::size_t weyl_order() const { return weyl_elements().size(); }
  // Two reduced words for the longest element (greedy, first/last index).
  std::vector<int> longest_word(bool prefer_high_index = false) const;

 private:
  std::map<IVec, int> coroot_index_;
  std::map<IVec, int> root_index_;
  Rat min_coroot_norm2_, max_coroot_norm2_;
  Rat min_root_norm2_, max_root_norm2_;
  mutable std::vector<WeylElement> weyl_cache_;
  friend RootSystem build_root_system(const CartanDatum& datum);
};

// Closes the simple (co)roots under simple reflections and derives heights,
// level counts and exponents (the dual partition of the coroot heights).
RootSystem build_root_system(const CartanDatum& datum);

// Cartan datum of the Langlands dual: transposed matrix, inverted lengths.
CartanDatum dual_datum(const CartanDatum& datum);

// Exact inverse of the Cartan matrix.
std::vector<std::vector<Rat>> inverse_cartan(const CartanDatum& datum);

}  // namespace zhelo
