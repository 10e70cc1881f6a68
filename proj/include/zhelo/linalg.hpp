#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zhelo/rat.hpp"

namespace zhelo {

using RatVec = std::vector<Rat>;
using RatRows = std::vector<RatVec>;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(RatRows& m);

int rank_of(RatRows m);

// Basis of the right kernel of the (rows x ncols) matrix.
RatRows nullspace(const RatRows& m, int ncols);

// Particular solution of A x = b with the free variables set to zero;
// nullopt when inconsistent.
std::optional<RatVec> solve_dense(RatRows a, RatVec b);

// One equation of a sparse exact linear system.
struct SparseRow {
  std::vector<std::pair<int, Rat>> a;
  Rat rhs;
};

// Exact solve of a sparse rational system.  Small systems go through dense
// rational elimination; large ones through word-size modular elimination
// with CRT and rational reconstruction, and the candidate is verified
// against every row exactly before being returned.
std::optional<RatVec> solve_sparse(const std::vector<SparseRow>& rows, int ncols);

}  // namespace zhelo
