#pragma once

#include <set>
#include <string>
#include <vector>

#include "zhelo/bgg.hpp"
#include "zhelo/chevalley.hpp"
#include "zhelo/poly.hpp"
#include "zhelo/rootsys.hpp"

namespace zhelo {

// Classification of a pair (simple root alpha, positive coroot gamma):
//   Good:            alpha(gamma) = -1
//   StartingBad:     alpha(gamma) = -2, gamma simple, and alpha is the unique
//                    simple coroot d with 2 alpha + gamma - d a coroot
//   IntermediateBad: same uniqueness condition with gamma not simple; the
//                    companion is the neighbour beta with beta(gamma) = 2
// Coroots are addressed as positive roots of the dual system.
enum class PairKind { Neither, Good, StartingBad, IntermediateBad };

struct PairClass {
  PairKind kind = PairKind::Neither;
  int companion = -1;  // second letter for bad steps (gamma itself when starting)
};

PairClass classify_pair(const ChevalleyBasis& cb, int alpha, int gamma);

// A build step gamma = delta + alpha (good) or gamma = delta + 2 alpha (bad).
struct Step {
  int alpha;
  int from;  // dual root index of delta
  PairKind kind;
  int companion;
};

// All one-step predecessors of a non-simple positive coroot.
std::vector<Step> predecessor_steps(const ChevalleyBasis& cb, int gamma);

// gamma = s_{j_1} ... s_{j_s} alpha_{j_{s+1}} with strictly decreasing heights;
// every step is a good or bad pair.
struct DecreasingPath {
  std::vector<int> word;  // j_1 .. j_s
  int terminal;           // j_{s+1}
  std::vector<Step> steps;  // from the simple coroot upward
};

DecreasingPath decreasing_reflection_path(const ChevalleyBasis& cb, int gamma);

// ---- the monoid realization in the coinvariant algebra ------------------

struct MonoidVertex {
  int level = 0;   // word length, generators count as one letter
  int degree = 0;  // polynomial degree of the class
  Poly rep;        // scalar-normalized reduced representative
  std::vector<int> witness;  // letters, last entry is the generator
  std::set<int> support;
  bool in_P_image = false;
};

struct MonoidGraph {
  std::vector<MonoidVertex> verts;
  struct Edge {
    int from, letter, to;
  };
  std::vector<Edge> edges;
  std::vector<int> level_counts;  // [1..max level]
  int max_level = 0;
  std::vector<int> generator_vertex;  // per simple index

  int find_class(const Poly& normalized_rep, int degree) const;
};

// Classes of the divided gradients of the top invariant generator; all
// nonzero.
std::vector<Poly> realize_P0(const RootSystem& rs, const InvariantRing& ring, CoinvariantSpace& cs);

MonoidGraph enumerate_monoid(const RootSystem& rs, const InvariantRing& ring, CoinvariantSpace& cs);

// Injection of the positive coroots into the monoid, built along good/bad
// decreasing paths; marks the image in the graph.
std::vector<int> compute_pmap(const RootSystem& rs, const ChevalleyBasis& cb, CoinvariantSpace& cs,
                              MonoidGraph& g);

// Class of an explicit word (letters ..., generator last), or -1 if zero.
int class_of_word(const RootSystem& rs, CoinvariantSpace& cs, const MonoidGraph& g,
                  const std::vector<int>& witness);

std::string witness_to_string(const std::vector<int>& witness);

// ---- the polynomials P_gamma --------------------------------------------

struct PGammaTable {
  std::vector<Poly> val;  // indexed by dual positive root
};

// Walks every good/bad step consistently; faults on any path disagreement
// or zero structure constant.
PGammaTable propagate_P(const RootSystem& rs, const ChevalleyBasis& cb,
                        const std::vector<Poly>& tuple);

struct RecurrenceReport {
  long checked = 0;
  std::vector<std::string> failures;
  std::vector<int> failed_recurrence;  // coroots where the sum recurrence fails
  std::vector<int> failed_vanishing;   // (alpha, gamma) packed as alpha*npos+gamma
  bool ok() const { return failures.empty(); }
};

// translated=true checks the inhomogeneous recurrence with denominators
// 1+gamma (and the vanishing statements for alpha(gamma) >= 0); false checks
// the leading-term version with denominators gamma.
RecurrenceReport verify_recurrences(const RootSystem& rs, const ChevalleyBasis& cb,
                                    const PGammaTable& table, bool translated);

// ---- exports -------------------------------------------------------------

std::string export_dot(const MonoidGraph& g);
std::string census_json(const std::string& tag, const MonoidGraph& g);

}  // namespace zhelo
