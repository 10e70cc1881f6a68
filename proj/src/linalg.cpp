#include "zhelo/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>

namespace zhelo {

std::vector<int> rref(RatRows& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_of(RatRows m) { return static_cast<int>(rref(m).size()); }

RatRows nullspace(const RatRows& m_in, int ncols) {
  RatRows m = m_in;
  for (auto& row : m) row.resize(ncols, Rat(0));
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatRows basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(ncols, Rat(0));
    v[c] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_dense(RatRows a, RatVec b) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // Inconsistent if the augmented column became a pivot.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

// ---------------------------------------------------------------------------
// Modular path
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 nth_prime(std::size_t k) {
  // Shared across the parallel verification jobs.
  static std::mutex mu;
  static std::vector<u64> pool;
  std::lock_guard<std::mutex> lock(mu);
  u64 cand = pool.empty() ? ((1ULL << 62) - 1) : pool.back() - 2;
  while (pool.size() <= k) {
    while (!is_prime_u64(cand)) cand -= 2;
    pool.push_back(cand);
    cand -= 2;
  }
  return pool[k];
}

u64 inv_mod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

struct IntRow {
  std::vector<std::pair<int, mpz_class>> a;
  mpz_class rhs;
};

// Forward elimination + back substitution mod p with the free variables
// pinned to zero.  pivot_cols is filled on the first call and enforced on
// subsequent primes so the particular solution is the same across primes.
// Returns false if this prime cannot follow the established pivot pattern.
bool solve_mod_p(const std::vector<IntRow>& rows, int ncols, u64 p, std::vector<int>& pivot_cols,
                 bool pattern_fixed, std::vector<u64>& sol, bool& inconsistent) {
  int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<u64>> m(nrows, std::vector<u64>(ncols + 1, 0));
  for (int i = 0; i < nrows; ++i) {
    for (auto& [c, v] : rows[i].a) {
      u64 r = mpz_fdiv_ui(v.get_mpz_t(), p);
      m[i][c] = (m[i][c] + r) % p;
    }
    m[i][ncols] = mpz_fdiv_ui(rows[i].rhs.get_mpz_t(), p);
  }
  inconsistent = false;
  std::vector<int> pivot_row_of;  // row used for each pivot col
  int next_row = 0;
  auto eliminate_with = [&](int prow, int pcol) {
    u64 inv = inv_mod(m[prow][pcol], p);
    for (int j = pcol; j <= ncols; ++j) m[prow][j] = mulmod(m[prow][j], inv, p);
    for (int i = 0; i < nrows; ++i) {
      if (i == prow || m[i][pcol] == 0) continue;
      u64 f = p - m[i][pcol];
      for (int j = pcol; j <= ncols; ++j) m[i][j] = (m[i][j] + mulmod(f, m[prow][j], p)) % p;
    }
  };
  if (!pattern_fixed) {
    pivot_cols.clear();
    for (int c = 0; c < ncols && next_row < nrows; ++c) {
      int piv = -1;
      for (int i = next_row; i < nrows; ++i)
        if (m[i][c] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[next_row]);
      eliminate_with(next_row, c);
      pivot_cols.push_back(c);
      pivot_row_of.push_back(next_row);
      ++next_row;
    }
  } else {
    for (int c : pivot_cols) {
      int piv = -1;
      for (int i = next_row; i < nrows; ++i)
        if (m[i][c] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return false;  // unlucky prime
      std::swap(m[piv], m[next_row]);
      eliminate_with(next_row, c);
      pivot_row_of.push_back(next_row);
      ++next_row;
    }
  }
  for (int i = next_row; i < nrows; ++i) {
    bool zero_row = true;
    for (int j = 0; j < ncols; ++j)
      if (m[i][j] != 0) {
        zero_row = false;
        break;
      }
    if (zero_row && m[i][ncols] != 0) {
      inconsistent = true;
      return true;
    }
    if (!zero_row && pattern_fixed) return false;  // pattern missed rank
  }
  sol.assign(ncols, 0);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol[pivot_cols[k]] = m[k][ncols];
  return true;
}

bool rational_reconstruct(const mpz_class& residue, const mpz_class& modulus, Rat& out) {
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), mpz_class(modulus / 2).get_mpz_t());
  mpz_class r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
  mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
  if (den > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    num /= g;
    den /= g;
  }
  out = Rat(num, den);
  out.canonicalize();
  return true;
}

bool verify_solution(const std::vector<SparseRow>& rows, const RatVec& x) {
  for (const auto& row : rows) {
    Rat acc(0);
    for (auto& [c, v] : row.a) acc += v * x[c];
    if (acc != row.rhs) return false;
  }
  return true;
}

std::optional<RatVec> solve_sparse_modular(const std::vector<SparseRow>& rows, int ncols) {
  // Clear denominators row by row.
  std::vector<IntRow> irows(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mpz_class lcm = rows[i].rhs.get_den();
    for (auto& [c, v] : rows[i].a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    irows[i].rhs = rows[i].rhs.get_num() * (lcm / rows[i].rhs.get_den());
    for (auto& [c, v] : rows[i].a)
      irows[i].a.emplace_back(c, mpz_class(v.get_num() * (lcm / v.get_den())));
  }

  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<int> pivot_cols;
    bool pattern_fixed = false;
    mpz_class modulus = 1;
    std::vector<mpz_class> crt(ncols, 0);
    int inconsistent_votes = 0;
    std::size_t prime_idx = attempt;  // start the pattern from a fresh prime per attempt
    for (int used = 0; used < 24 && prime_idx < static_cast<std::size_t>(attempt) + 64; ++prime_idx) {
      u64 p = nth_prime(prime_idx);
      std::vector<u64> sol;
      bool inconsistent = false;
      if (!solve_mod_p(irows, ncols, p, pivot_cols, pattern_fixed, sol, inconsistent)) continue;
      if (inconsistent) {
        if (++inconsistent_votes >= 2) return std::nullopt;
        continue;
      }
      pattern_fixed = true;
      ++used;
      // Incremental CRT.
      if (modulus == 1) {
        for (int c = 0; c < ncols; ++c) crt[c] = sol[c];
        modulus = p;
      } else {
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (int c = 0; c < ncols; ++c) {
          mpz_class rp = sol[c];
          mpz_class diff = ((rp - crt[c] % pz) % pz + pz) % pz;
          crt[c] += modulus * ((diff * minv) % pz);
        }
        modulus *= pz;
      }
      if (used >= 1) {
        RatVec x(ncols, Rat(0));
        bool ok = true;
        for (int c = 0; c < ncols && ok; ++c) ok = rational_reconstruct(crt[c], modulus, x[c]);
        if (ok && verify_solution(rows, x)) return x;
      }
    }
  }
  fault("modular linear solve failed to converge");
}

}  // namespace

std::optional<RatVec> solve_sparse(const std::vector<SparseRow>& rows, int ncols) {
  if (ncols <= 48) {
    RatRows a(rows.size(), RatVec(ncols, Rat(0)));
    RatVec b(rows.size(), Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (auto& [c, v] : rows[i].a) a[i][c] += v;
      b[i] = rows[i].rhs;
    }
    return solve_dense(std::move(a), std::move(b));
  }
  return solve_sparse_modular(rows, ncols);
}

}  // namespace zhelo
