#include "zhelo/zhelobenko.hpp"

#include <algorithm>

#include "zhelo/linalg.hpp"

namespace zhelo {

std::vector<RatFn> xi_apply(const RootSystem& rs, int i, const std::vector<Poly>& q) {
  int nv = rs.rank;
  Poly hi = Poly::variable(nv, i);
  Poly si_qi = dot_act(rs, i, q[i]);
  std::vector<RatFn> out(nv);
  for (int j = 0; j < nv; ++j) {
    if (j == i) {
      // -(h_i + 2)/h_i * s_i.q_i
      Poly hi2 = hi + Poly::constant(nv, Rat(2));
      out[j].num = -(hi2 * si_qi);
      out[j].den = hi;
    } else {
      int aji = rs.datum.a[j][i];
      Poly num = dot_act(rs, i, q[j]) * hi;
      if (aji != 0) {
        Poly hi1 = hi + Poly::constant(nv, Rat(1));
        num -= Rat(aji) * (hi1 * si_qi);
      }
      out[j].num = num;
      out[j].den = hi;
    }
  }
  return out;
}

std::vector<Poly> extract_P(const RootSystem& rs, const std::vector<Poly>& q) {
  int nv = rs.rank;
  std::vector<Poly> P(nv, Poly(nv));
  for (int i = 0; i < nv; ++i) {
    Poly div = Poly::variable(nv, i) + Poly::constant(nv, Rat(2));
    auto p = divide_by_linear(q[i], div);
    require(p.has_value(), "q_i not divisible by h_i + 2");
    P[i] = theta_inv(*p);
  }
  return P;
}

Poly recurrence_residual(const RootSystem& rs, const std::vector<Poly>& P, int i, int j) {
  int nv = rs.rank;
  int aji = rs.datum.a[j][i];
  // 1 + s_i(h_j) = 1 + h_j - a[j][i] h_i
  Poly lin = Poly::variable(nv, j) + Poly::constant(nv, Rat(1));
  if (aji != 0) lin -= Poly::variable(nv, i) * Rat(aji);
  return lin * bgg_apply(rs, i, P[j]) - Rat(aji) * (P[i] - P[j]);
}

bool recurrence_holds(const RootSystem& rs, const std::vector<Poly>& P) {
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (!recurrence_residual(rs, P, i, j).is_zero()) return false;
  return true;
}

InvarianceReport check_invariant(const RootSystem& rs, const std::vector<Poly>& q) {
  int nv = rs.rank;
  InvarianceReport rep;
  rep.fixed_point = true;
  for (int i = 0; i < nv; ++i) {
    auto xi = xi_apply(rs, i, q);
    for (int j = 0; j < nv; ++j) {
      // denominators are h_i: clear them against q_j
      Poly resid = xi[j].num - xi[j].den * q[j];
      if (!resid.is_zero()) {
        rep.fixed_point = false;
        rep.residuals.push_back("xi_" + std::to_string(i + 1) + " moves component " +
                                std::to_string(j + 1) + ": " + resid.to_string());
      }
    }
  }
  rep.divisibility = true;
  std::vector<Poly> P(nv, Poly(nv));
  for (int i = 0; i < nv; ++i) {
    Poly div = Poly::variable(nv, i) + Poly::constant(nv, Rat(2));
    auto p = divide_by_linear(q[i], div);
    if (!p.has_value()) {
      rep.divisibility = false;
      break;
    }
    P[i] = theta_inv(*p);
  }
  rep.recurrence = rep.divisibility && recurrence_holds(rs, P);
  // The two criteria characterize the same invariants.
  bool via_recurrence = rep.divisibility && rep.recurrence;
  require(rep.fixed_point == via_recurrence, "invariance criteria disagree");
  return rep;
}

ZheloInvariant assemble_invariant(const RootSystem& rs, const std::vector<Poly>& P) {
  require(recurrence_holds(rs, P), "tuple rejected: divided-difference recurrence fails");
  int nv = rs.rank;
  ZheloInvariant J;
  J.P = P;
  J.m = 0;
  for (auto& p : P) J.m = std::max(J.m, p.degree() + 1);
  J.P0.resize(nv, Poly(nv));
  J.q.resize(nv, Poly(nv));
  for (int i = 0; i < nv; ++i) {
    J.P0[i] = P[i].homogeneous_part(J.m - 1);
    Poly div = Poly::variable(nv, i) + Poly::constant(nv, Rat(2));
    J.q[i] = div * theta(P[i]);
  }
  auto round_trip = extract_P(rs, J.q);
  require(round_trip == P, "extract/assemble round trip failed");
  require(check_invariant(rs, J.q).invariant(), "assembled tuple is not a xi fixed point");
  return J;
}

namespace {

// One homogeneous layer of the descending solve: find X (tuple of degree-d
// homogeneous polynomials) with
//   A_i X_i = 0
//   (h_j - a[j][i] h_i) A_i X_j - a[j][i](X_i - X_j) = -A_i higher_j   (i != j)
std::vector<Poly> solve_layer(const RootSystem& rs, int d, const std::vector<Poly>& higher) {
  int nv = rs.rank;
  auto monos = monomials_of_degree(nv, d);
  int nm = static_cast<int>(monos.size());
  int ncols = nv * nm;
  auto col_of = [&](int i, int mono_idx) { return i * nm + mono_idx; };

  std::map<Expo, int> mono_index;
  for (int k = 0; k < nm; ++k) mono_index[monos[k]] = k;
  auto row_index_of = [&](std::map<Expo, int>& idx, const Expo& e) {
    auto it = idx.find(e);
    require(it != idx.end(), "scatter outside the degree block");
    return it->second;
  };

  // A_i applied to each monomial, shared across equation blocks.
  std::vector<std::vector<Poly>> A_mono(nv, std::vector<Poly>(nm));
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < nm; ++k)
      A_mono[i][k] = bgg_apply(rs, i, Poly::monomial(nv, monos[k], Rat(1)));

  std::vector<SparseRow> rows;

  // A_i X_i = 0, one row per monomial of degree d-1.
  if (d >= 1) {
    auto lower = monomials_of_degree(nv, d - 1);
    std::map<Expo, int> lower_index;
    for (std::size_t k = 0; k < lower.size(); ++k) lower_index[lower[k]] = static_cast<int>(k);
    for (int i = 0; i < nv; ++i) {
      std::size_t base = rows.size();
      rows.resize(base + lower.size());
      for (int k = 0; k < nm; ++k)
        for (auto& [e, c] : A_mono[i][k].terms())
          rows[base + row_index_of(lower_index, e)].a.emplace_back(col_of(i, k), c);
    }
  }

  // Mixed equations, one row per monomial of degree d.
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (i == j) continue;
      int aji = rs.datum.a[j][i];
      Poly lin = Poly::variable(nv, j);
      if (aji != 0) lin -= Poly::variable(nv, i) * Rat(aji);
      std::size_t base = rows.size();
      rows.resize(base + nm);
      for (int k = 0; k < nm; ++k) {
        Poly op = lin * A_mono[i][k];
        for (auto& [e, c] : op.terms())
          rows[base + row_index_of(mono_index, e)].a.emplace_back(col_of(j, k), c);
        if (aji != 0) {
          rows[base + k].a.emplace_back(col_of(i, k), Rat(-aji));
          rows[base + k].a.emplace_back(col_of(j, k), Rat(aji));
        }
      }
      Poly rhs = -bgg_apply(rs, i, higher[j]);
      for (auto& [e, c] : rhs.terms()) rows[base + row_index_of(mono_index, e)].rhs = c;
    }
  }

  auto sol = solve_sparse(rows, ncols);
  require(sol.has_value(), "no solution at an exponent degree: freeness violated");
  std::vector<Poly> X(nv, Poly(nv));
  for (int i = 0; i < nv; ++i)
    for (int k = 0; k < nm; ++k)
      if (!is_zero((*sol)[col_of(i, k)])) X[i].add_term(monos[k], (*sol)[col_of(i, k)]);
  return X;
}

}  // namespace

std::vector<ZheloInvariant> solve_generators(const RootSystem& rs, const InvariantRing& ring) {
  int nv = rs.rank;
  std::vector<ZheloInvariant> out;
  for (std::size_t g = 0; g < ring.gens.size(); ++g) {
    int m = ring.degrees[g] - 1;
    // Leading terms: the divided gradient of the invariant generator.
    std::vector<Poly> lead(nv, Poly(nv));
    for (int i = 0; i < nv; ++i) {
      Poly grad = gradient_component(rs, i, ring.gens[g]);
      auto div = divide_by_variable(grad, i);
      require(div.has_value(), "invariant gradient component not divisible by h_i");
      lead[i] = *div;
    }
    // The leading layer must satisfy the homogeneous recurrence on its own.
    for (int i = 0; i < nv; ++i) {
      require(bgg_apply(rs, i, lead[i]).is_zero(), "leading tuple: A_i P0_i != 0");
      for (int j = 0; j < nv; ++j) {
        if (i == j) continue;
        int aji = rs.datum.a[j][i];
        Poly lin = Poly::variable(nv, j);
        if (aji != 0) lin -= Poly::variable(nv, i) * Rat(aji);
        Poly resid = lin * bgg_apply(rs, i, lead[j]) - Rat(aji) * (lead[i] - lead[j]);
        require(resid.is_zero(), "leading tuple violates the homogeneous recurrence");
      }
    }
    std::vector<Poly> P = lead;
    std::vector<Poly> layer = lead;
    for (int d = m - 2; d >= 0; --d) {
      layer = solve_layer(rs, d, layer);
      for (int i = 0; i < nv; ++i) P[i] += layer[i];
    }
    content_normalize(P);
    ZheloInvariant J = assemble_invariant(rs, P);
    require(J.m == m, "assembled invariant has unexpected degree");
    out.push_back(std::move(J));
  }
  return out;
}

}  // namespace zhelo
