#include "zhelo/verify.hpp"

#include <algorithm>

namespace zhelo {

namespace {

// Embeds an l-tuple of polynomials evaluated on the rho-line into the dual
// Cartan and reports the least annihilating power of ad(e).
int minimal_power(const RootSystem& rs, const ChevalleyBasis& cb, const std::vector<Poly>& comps,
                  int cap) {
  std::vector<Poly> evald;
  evald.reserve(comps.size());
  for (const auto& c : comps) evald.push_back(eval_srho(c));
  DualElement v = embed_weight_vector(cb, rs, evald);
  DualElement e = principal_e(cb);
  return nilpotency_index(cb, e, v, cap);
}

}  // namespace

bool SymmetricReport::ok() const {
  for (auto& i : items)
    if (!i.pass) return false;
  return true;
}

SymmetricReport check_symmetric_kostant(const RootSystem& rs, const ChevalleyBasis& cb,
                                        const InvariantRing& ring) {
  SymmetricReport rep;
  for (std::size_t g = 0; g < ring.gens.size(); ++g) {
    int m = ring.degrees[g] - 1;
    std::vector<Poly> comps;
    for (int i = 0; i < rs.rank; ++i) comps.push_back(gradient_component(rs, i, ring.gens[g]));
    int k = minimal_power(rs, cb, comps, m + 2);
    rep.items.push_back({m, k, k <= m + 1});
  }
  return rep;
}

bool AnalogueReport::ok() const {
  for (auto& i : items)
    if (!(i.pass_main && i.pass_leading && i.pass_translate)) return false;
  return true;
}

AnalogueReport check_analogue_kostant(const RootSystem& rs, const ChevalleyBasis& cb,
                                      const std::vector<ZheloInvariant>& gens) {
  AnalogueReport rep;
  for (const auto& J : gens) {
    AnalogueReport::Item item;
    item.m = J.m;
    int k = minimal_power(rs, cb, J.q, J.m + 2);
    item.minimal_power = k;
    item.pass_main = k <= J.m + 1;
    item.pass_leading = minimal_power(rs, cb, J.P0, J.m + 2) <= J.m + 1;
    item.pass_translate = minimal_power(rs, cb, J.P, J.m + 2) <= J.m + 1;
    rep.items.push_back(item);
  }
  return rep;
}

namespace {

RatFn1 ratfn_poly(const Poly& p) { return RatFn1::of(p); }

RatFn1 ratfn_const(const Rat& c) { return RatFn1::of(Poly::constant(1, c)); }

// s as a rational function
RatFn1 ratfn_s() { return RatFn1::of(Poly::variable(1, 0)); }

}  // namespace

Eq24Report adjust_and_check_eq24(const RootSystem& rs, const ChevalleyBasis& cb,
                                 const std::vector<ZheloInvariant>& gens, int m) {
  const ZheloInvariant* main_gen = nullptr;
  for (const auto& J : gens)
    if (J.m == m) main_gen = &J;
  require(main_gen != nullptr, "no generator of the requested degree");
  return adjust_and_check_eq24(rs, cb, gens, *main_gen);
}

Eq24Report adjust_and_check_eq24(const RootSystem& rs, const ChevalleyBasis& cb,
                                 const std::vector<ZheloInvariant>& gens,
                                 const ZheloInvariant& main_gen_ref) {
  Eq24Report rep;
  const int m = main_gen_ref.m;
  rep.m = m;
  const RootSystem& d = cb.dual;
  const ZheloInvariant* main_gen = &main_gen_ref;

  PGammaTable main_table = propagate_P(rs, cb, main_gen->P);
  PGammaTable lead_table = propagate_P(rs, cb, main_gen->P0);

  // Degree bookkeeping: deg P_gamma = m - height(gamma).
  for (int g = 0; g < d.num_positive(); ++g) {
    int expect = m - d.root_height[g];
    require(main_table.val[g].degree() <= std::max(expect, -1), "P_gamma degree exceeds m - height");
    if (expect >= 0)
      require(lead_table.val[g] == main_table.val[g].homogeneous_part(expect),
              "leading-term table differs from leading terms");
  }

  // Lower-degree generator tables, evaluated on the rho-line.
  struct Lower {
    int m;
    std::vector<RatFn1> vals;  // per dual root
  };
  std::vector<Lower> lower;
  for (const auto& J : gens) {
    if (J.m >= m) continue;
    PGammaTable t = propagate_P(rs, cb, J.P);
    Lower L;
    L.m = J.m;
    for (int g = 0; g < d.num_positive(); ++g) L.vals.push_back(ratfn_poly(eval_srho(t.val[g])));
    lower.push_back(std::move(L));
  }

  std::vector<RatFn1> V, V0;
  for (int g = 0; g < d.num_positive(); ++g) {
    V.push_back(ratfn_poly(eval_srho(main_table.val[g])));
    V0.push_back(ratfn_poly(eval_srho(lead_table.val[g])));
  }

  auto level_indices = [&](int r) { return roots_at_level(cb, r); };

  // Base level r = m: the values are scalars equal to their leading terms.
  RatFn1 c = ratfn_const(Rat(1));
  for (int g : level_indices(m))
    require(V[g] == V0[g], "base level of the descent is not proportional");

  for (int r = m; r >= 2; --r) {
    auto below = level_indices(r - 1);
    if (below.empty()) continue;
    RatFn1 sr = ratfn_s() * ratfn_const(Rat(r));
    RatFn1 c_next = c * (sr + ratfn_const(Rat(1))) / sr;

    std::vector<RatFn1> defect;
    for (int g : below) defect.push_back(V[g] - c_next * V0[g]);

    int kdim = static_cast<int>(below.size()) - static_cast<int>(level_indices(r).size());
    // Kernel tuples: generators of exponent r-1 (tuple degree r-2).
    std::vector<const Lower*> kernel;
    for (const auto& L : lower)
      if (L.m == r - 1) kernel.push_back(&L);
    require(static_cast<int>(kernel.size()) == kdim,
            "kernel dimension does not match the generator count at level " + std::to_string(r - 1));

    if (!kernel.empty()) {
      // Scalar kernel matrix K[j][delta] (constant rational functions).
      RatRows K(kernel.size(), RatVec(below.size(), Rat(0)));
      for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t t = 0; t < below.size(); ++t) {
          const RatFn1& v = kernel[j]->vals[below[t]];
          require(v.den.is_constant() && v.num.degree() <= 0, "kernel entry is not a scalar");
          K[j][t] = v.num.constant_term() / v.den.constant_term();
        }
      // Greedy choice of R: first columns on which the kernel rows are
      // independent.
      std::vector<int> R;
      {
        RatRows probe;
        for (std::size_t t = 0; t < below.size() && R.size() < kernel.size(); ++t) {
          RatRows attempt = probe;
          RatVec col(kernel.size());
          for (std::size_t j = 0; j < kernel.size(); ++j) col[j] = K[j][t];
          attempt.push_back(col);
          if (rank_of(attempt) == static_cast<int>(attempt.size())) {
            probe = attempt;
            R.push_back(static_cast<int>(t));
          }
        }
        require(R.size() == kernel.size(), "kernel coordinate system is singular");
      }
      // Solve sum_j b_j K[j][t] = defect[t] for t in R (k x k system over
      // the rational-function field).
      std::size_t k = kernel.size();
      std::vector<std::vector<RatFn1>> M(k, std::vector<RatFn1>(k + 1));
      for (std::size_t rI = 0; rI < k; ++rI) {
        for (std::size_t cI = 0; cI < k; ++cI) M[rI][cI] = ratfn_const(K[cI][R[rI]]);
        M[rI][k] = defect[R[rI]];
      }
      for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && M[piv][col].is_zero()) ++piv;
        require(piv < k, "singular kernel system");
        std::swap(M[piv], M[col]);
        for (std::size_t rI = 0; rI < k; ++rI) {
          if (rI == col || M[rI][col].is_zero()) continue;
          RatFn1 f = M[rI][col] / M[col][col];
          for (std::size_t cI = col; cI <= k; ++cI) M[rI][cI] = M[rI][cI] - f * M[col][cI];
        }
      }
      std::vector<RatFn1> b(k);
      for (std::size_t j = 0; j < k; ++j) b[j] = M[j][k] / M[j][j];
      // Apply the correction everywhere (it vanishes at levels >= r).
      for (int g = 0; g < d.num_positive(); ++g)
        for (std::size_t j = 0; j < k; ++j) V[g] = V[g] - b[j] * kernel[j]->vals[g];
      rep.adjusted_levels.push_back(r - 1);
    }
    // Every entry of the level must now match, adjusted or not.
    for (int g : below) {
      RatFn1 resid = V[g] - c_next * V0[g];
      if (!resid.is_zero()) {
        rep.notes.push_back("level " + std::to_string(r - 1) + " fails proportionality");
        return rep;
      }
    }
    c = c_next;
  }
  // c_1 must be the telescoped product of the level ratios.
  RatFn1 expect = ratfn_const(Rat(1));
  for (int r = 2; r <= m; ++r) {
    RatFn1 sr = ratfn_s() * ratfn_const(Rat(r));
    expect = expect * (sr + ratfn_const(Rat(1))) / sr;
  }
  require(c == expect, "final ratio differs from the telescoped product");
  rep.final_ratio = c;
  rep.pass = true;
  return rep;
}

CountReport check_generator_counting(const RootSystem& rs, const ChevalleyBasis& cb,
                                     const std::vector<ZheloInvariant>& gens) {
  CountReport rep;
  const RootSystem& d = cb.dual;
  int maxh = d.root_height[d.highest_root_index];
  auto n_of = [&](int r) {
    if (r < 1 || r > maxh) return 0;
    return static_cast<int>(roots_at_level(cb, r).size());
  };
  rep.pass = true;
  int total = 0;
  for (int r = 2; r <= maxh + 1; ++r) {
    int expect = n_of(r - 1) - n_of(r);
    int got = 0;
    for (const auto& J : gens)
      if (J.m == r - 1) ++got;
    total += expect;
    if (got != expect) {
      rep.pass = false;
      rep.notes.push_back("degree " + std::to_string(r - 2) + ": " + std::to_string(got) +
                          " generator tuples, expected " + std::to_string(expect));
    }
    if (expect > 0 && d.datum.family != 'G') {
      // Independence of the kernel tuples: the level-(r-1) scalar vectors
      // of the degree-(r-2) tuples (the good/bad walk excludes G2).
      auto below = roots_at_level(cb, r - 1);
      RatRows K;
      for (const auto& J : gens) {
        if (J.m != r - 1) continue;
        PGammaTable t = propagate_P(rs, cb, J.P);
        RatVec row;
        for (int g : below) {
          require(t.val[g].is_constant(), "kernel tuple entry is not scalar");
          row.push_back(t.val[g].constant_term());
        }
        K.push_back(std::move(row));
      }
      if (!K.empty() && rank_of(K) != static_cast<int>(K.size())) {
        rep.pass = false;
        rep.notes.push_back("kernel tuples at level " + std::to_string(r - 1) +
                            " are linearly dependent");
      }
    }
  }
  if (total != rs.rank) {
    rep.pass = false;
    rep.notes.push_back("telescoped generator count differs from the rank");
  }
  return rep;
}

}  // namespace zhelo
