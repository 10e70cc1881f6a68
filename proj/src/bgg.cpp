#include "zhelo/bgg.hpp"

#include <algorithm>

namespace zhelo {

Poly bgg_apply(const RootSystem& rs, int i, const Poly& q) {
  Poly num = q - weyl_act(rs, i, q);
  auto quot = divide_by_variable(num, i);
  require(quot.has_value(), "BGG numerator not divisible by h_i");
  return *quot;
}

Poly bgg_word_apply(const RootSystem& rs, const std::vector<int>& word, const Poly& q) {
  Poly r = q;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = bgg_apply(rs, *it, r);
  return r;
}

std::vector<Expo> monomials_of_degree(int nvars, int d) {
  std::vector<Expo> out;
  Expo cur{};
  // Lexicographic enumeration matching the Expo order within one degree.
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = static_cast<std::uint8_t>(rem);
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[var] = static_cast<std::uint8_t>(e);
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RatVec poly_to_vec(const Poly& p, const std::map<Expo, int>& index, int dim) {
  RatVec v(dim, Rat(0));
  for (auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    require(it != index.end(), "monomial outside expected degree");
    v[it->second] = c;
  }
  return v;
}

// Maintains a reduced row space with pivot bookkeeping for incremental
// independence tests.
struct IncrementalSpan {
  RatRows rows;
  std::vector<int> pivots;

  // Reduces v in place; returns true (and absorbs v) if independent.
  bool add(RatVec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (is_zero(v[pivots[r]])) continue;
      Rat f = v[pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return false;
    Rat inv = Rat(1) / v[piv];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

}  // namespace

InvariantRing invariant_generators(const RootSystem& rs) {
  InvariantRing ring;
  int nv = rs.rank;
  const auto& weyl = rs.weyl_elements();

  std::vector<int> targets = rs.exponents();
  for (auto& t : targets) t += 1;  // generator degrees

  auto reynolds = [&](const Expo& e) {
    Poly mono = Poly::monomial(nv, e, Rat(1));
    Poly sum(nv);
    for (const auto& w : weyl) sum += weyl_act(rs, w.mat, mono);
    std::vector<Poly> t{sum};
    content_normalize(t);
    return t[0];
  };

  for (std::size_t gi = 0; gi < targets.size();) {
    int deg = targets[gi];
    int want = 0;
    while (gi + want < targets.size() && targets[gi + want] == deg) ++want;

    auto monos = monomials_of_degree(nv, deg);
    std::map<Expo, int> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = static_cast<int>(k);
    int dim = static_cast<int>(monos.size());

    // Span of the degree-deg part of the subalgebra generated so far.
    IncrementalSpan span;
    {
      std::vector<Poly> products;
      std::vector<int> counts(ring.gens.size(), 0);
      auto rec = [&](auto&& self, std::size_t from, int rem, const Poly& acc) -> void {
        if (rem == 0) {
          products.push_back(acc);
          return;
        }
        for (std::size_t g = from; g < ring.gens.size(); ++g)
          if (ring.degrees[g] <= rem) self(self, g, rem - ring.degrees[g], acc * ring.gens[g]);
      };
      rec(rec, 0, deg, Poly::constant(nv, Rat(1)));
      for (auto& p : products) span.add(poly_to_vec(p, index, dim));
    }

    int found = 0;
    auto consider = [&](const Expo& e) {
      if (found >= want) return;
      Poly cand = reynolds(e);
      if (cand.is_zero()) return;
      if (!span.add(poly_to_vec(cand, index, dim))) return;
      for (int i = 0; i < rs.rank; ++i)
        require(weyl_act(rs, i, cand) == cand, "Reynolds average not invariant");
      ring.gens.push_back(cand);
      ring.degrees.push_back(deg);
      ++found;
    };
    for (int i = 0; i < nv && found < want; ++i) {
      Expo e{};
      e[i] = static_cast<std::uint8_t>(deg);
      consider(e);
    }
    for (const auto& e : monos) {
      if (found >= want) break;
      consider(e);
    }
    require(found == want, "missing invariant generator in degree " + std::to_string(deg));
    gi += want;
  }
  return ring;
}

CoinvariantSpace::CoinvariantSpace(const RootSystem& rs, const InvariantRing& inv)
    : rs_(&rs), inv_(&inv) {
  // Poincare series of the coinvariant algebra: prod_i (1 + t + ... + t^{d_i-1}).
  poincare_ = {1};
  for (int d : inv.degrees) {
    std::vector<int> next(poincare_.size() + d - 1, 0);
    for (std::size_t k = 0; k < poincare_.size(); ++k)
      for (int j = 0; j < d; ++j) next[k + j] += poincare_[k];
    poincare_ = std::move(next);
  }
}

int CoinvariantSpace::expected_dim(int d) const {
  if (d < 0 || d >= static_cast<int>(poincare_.size())) return 0;
  return poincare_[d];
}

void CoinvariantSpace::ensure_degree(int d) {
  if (d < static_cast<int>(data_.size()) && data_[d].built) return;
  if (d >= static_cast<int>(data_.size())) data_.resize(d + 1);
  DegreeData& dd = data_[d];
  dd.monos = monomials_of_degree(rs_->rank, d);
  for (std::size_t k = 0; k < dd.monos.size(); ++k) dd.index[dd.monos[k]] = static_cast<int>(k);
  int dim = static_cast<int>(dd.monos.size());

  RatRows rows;
  for (std::size_t g = 0; g < inv_->gens.size(); ++g) {
    int dg = inv_->degrees[g];
    if (dg > d) continue;
    for (const auto& e : monomials_of_degree(rs_->rank, d - dg)) {
      Poly prod = inv_->gens[g] * Poly::monomial(rs_->rank, e, Rat(1));
      rows.push_back(poly_to_vec(prod, dd.index, dim));
    }
  }
  dd.pivot_col = rref(rows);
  rows.resize(dd.pivot_col.size());
  dd.echelon = std::move(rows);
  std::vector<bool> is_piv(dim, false);
  for (int c : dd.pivot_col) is_piv[c] = true;
  for (int c = 0; c < dim; ++c)
    if (!is_piv[c]) dd.nonpivot.push_back(c);
  dd.built = true;

  int got = dim - static_cast<int>(dd.pivot_col.size());
  require(got == expected_dim(d), "coinvariant dimension mismatch in degree " + std::to_string(d) +
                                      ": got " + std::to_string(got) + ", expected " +
                                      std::to_string(expected_dim(d)));
}

int CoinvariantSpace::dim(int d) {
  if (d < 0) return 0;
  ensure_degree(d);
  return static_cast<int>(data_[d].nonpivot.size());
}

const std::vector<Expo>& CoinvariantSpace::monomials(int d) {
  ensure_degree(d);
  return data_[d].monos;
}

Poly CoinvariantSpace::reduce(const Poly& q) {
  Poly out(q.nvars());
  int deg = q.degree();
  for (int d = 0; d <= deg; ++d) {
    Poly part = q.homogeneous_part(d);
    if (part.is_zero()) continue;
    ensure_degree(d);
    DegreeData& dd = data_[d];
    RatVec v = poly_to_vec(part, dd.index, static_cast<int>(dd.monos.size()));
    for (std::size_t r = 0; r < dd.echelon.size(); ++r) {
      Rat f = v[dd.pivot_col[r]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * dd.echelon[r][j];
    }
    for (std::size_t k = 0; k < dd.monos.size(); ++k)
      if (!is_zero(v[k])) out.add_term(dd.monos[k], v[k]);
  }
  return out;
}

RatVec CoinvariantSpace::coords(const Poly& reduced, int d) {
  ensure_degree(d);
  DegreeData& dd = data_[d];
  RatVec v(dd.nonpivot.size(), Rat(0));
  for (auto& [e, c] : reduced.terms()) {
    require(expo_degree(e) == d, "coords expects a homogeneous representative");
    auto it = dd.index.find(e);
    require(it != dd.index.end(), "monomial outside degree block");
    int col = it->second;
    auto pos = std::lower_bound(dd.nonpivot.begin(), dd.nonpivot.end(), col);
    require(pos != dd.nonpivot.end() && *pos == col, "reduced representative touches a pivot column");
    v[pos - dd.nonpivot.begin()] = c;
  }
  return v;
}

std::vector<int> find_killing_word(const RootSystem& rs, CoinvariantSpace& cs, const Poly& f) {
  Poly cur = cs.reduce(f);
  require(!cur.is_zero(), "find_killing_word needs a nonzero class");
  std::vector<int> applied;
  while (cur.degree() > 0) {
    int chosen = -1;
    Poly next;
    for (int i = 0; i < rs.rank; ++i) {
      Poly g = cs.reduce(bgg_apply(rs, i, cur));
      if (!g.is_zero()) {
        chosen = i;
        next = g;
        break;
      }
    }
    require(chosen >= 0, "nonscalar class killed by every A_i");
    applied.push_back(chosen);
    cur = next;
  }
  std::reverse(applied.begin(), applied.end());
  return applied;
}

}  // namespace zhelo
