#include "zhelo/chevalley.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace zhelo {

namespace {

IVec vec_add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

IVec vec_neg(const IVec& a) {
  IVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = -a[k];
  return c;
}

bool vec_positive(const IVec& a) {
  for (auto x : a)
    if (x > 0) return true;
  return false;
}

// Builds the table of structure constants on positive pairs, height by
// height, from the extraspecial pairs.
struct NBuilder {
  const RootSystem& rs;  // the dual system; its roots are the g-coroots
  std::map<std::pair<int, int>, long long> pos_table;  // (i<j) -> N_{i,j}

  explicit NBuilder(const RootSystem& r) : rs(r) {}

  int pstring(const IVec& a, const IVec& b) const {
    // p = max{k : b - k a is a root}
    int p = 0;
    IVec cur = b;
    while (true) {
      for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= a[k];
      if (!rs.is_root(cur)) break;
      ++p;
    }
    return p;
  }

  long long lookup_pos(int i, int j) const {
    if (i < j) {
      auto it = pos_table.find({i, j});
      require(it != pos_table.end(), "positive N pair not yet computed");
      return it->second;
    }
    auto it = pos_table.find({j, i});
    require(it != pos_table.end(), "positive N pair not yet computed");
    return -it->second;
  }

  // Evaluates N on arbitrary signed roots using the computed positive table.
  Rat eval(const IVec& x, const IVec& y) const {
    if (!rs.is_root(x) || !rs.is_root(y)) return Rat(0);
    IVec s = vec_add(x, y);
    if (!rs.is_root(s)) return Rat(0);
    bool xp = vec_positive(x), yp = vec_positive(y);
    if (xp && yp) {
      int i = *rs.positive_root_index(x), j = *rs.positive_root_index(y);
      return Rat(static_cast<long>(lookup_pos(i, j)));
    }
    if (!xp && !yp) return -eval(vec_neg(x), vec_neg(y));
    if (!xp) return -eval(y, x);
    // x positive, y negative.
    if (vec_positive(s)) {
      // N(x,y) = (s,s)/(x,x) * N(s, -y), both arguments positive.
      return rs.root_norm2(s) / rs.root_norm2(x) * eval(s, vec_neg(y));
    }
    return eval(vec_neg(y), vec_neg(x));
  }

  void build() {
    int maxh = 0;
    for (int k = 0; k < rs.num_positive(); ++k) maxh = std::max(maxh, rs.root_height[k]);
    for (int h = 2; h <= maxh; ++h) {
      for (int g = 0; g < rs.num_positive(); ++g) {
        if (rs.root_height[g] != h) continue;
        const IVec& gamma = rs.roots[g];
        // All unordered decompositions gamma = a + b with a before b.
        std::vector<std::pair<int, int>> pairs;
        for (int ia = 0; ia < rs.num_positive(); ++ia) {
          if (rs.root_height[ia] * 2 >= 2 * h) break;  // heights sorted ascending
          IVec b(gamma.size());
          for (std::size_t k = 0; k < gamma.size(); ++k) b[k] = gamma[k] - rs.roots[ia][k];
          auto ib = rs.positive_root_index(b);
          if (!ib || *ib <= ia) continue;
          pairs.emplace_back(ia, *ib);
        }
        require(!pairs.empty(), "no decomposition of a non-simple root");
        // Extraspecial pair: minimal first component in the root order.
        auto [a1, b1] = pairs.front();
        pos_table[{a1, b1}] = pstring(rs.roots[a1], rs.roots[b1]) + 1;
        for (std::size_t t = 1; t < pairs.size(); ++t) {
          auto [ia, ib] = pairs[t];
          const IVec &a = rs.roots[ia], &b = rs.roots[ib];
          const IVec &ea = rs.roots[a1], &eb = rs.roots[b1];
          // Four-root Jacobi identity on (ea, eb, -a, -b):
          //   N(ea,eb) N(a,b) / (gamma,gamma) =
          //     N(eb,-a) N(ea,-b) / (eb-a, eb-a) + N(-a,ea) N(eb,-b) / (ea-a, ea-a)
          Rat rhs(0);
          IVec eb_minus_a = vec_add(eb, vec_neg(a));
          if (rs.is_root(eb_minus_a))
            rhs += eval(eb, vec_neg(a)) * eval(ea, vec_neg(b)) / rs.root_norm2(eb_minus_a);
          IVec ea_minus_a = vec_add(ea, vec_neg(a));
          if (rs.is_root(ea_minus_a))
            rhs += eval(vec_neg(a), ea) * eval(eb, vec_neg(b)) / rs.root_norm2(ea_minus_a);
          Rat n = rs.root_norm2(gamma) * rhs / Rat(static_cast<long>(pos_table[{a1, b1}]));
          require(n.get_den() == 1, "non-integral structure constant");
          long long nv = static_cast<long long>(n.get_num().get_si());
          long long expect = pstring(a, b) + 1;
          require(nv == expect || nv == -expect, "structure constant magnitude mismatch");
          pos_table[{ia, ib}] = nv;
        }
      }
    }
  }
};

}  // namespace

IVec ChevalleyBasis::signed_vector(int a) const {
  if (a < npos) return dual.roots[a];
  IVec v = dual.roots[a - npos];
  for (auto& x : v) x = -x;
  return v;
}

std::optional<int> ChevalleyBasis::signed_index(const IVec& v) const {
  if (auto i = dual.positive_root_index(v)) return *i;
  IVec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
  if (auto i = dual.positive_root_index(neg)) return npos + *i;
  return std::nullopt;
}

long long ChevalleyBasis::n_of_vec(const IVec& x, const IVec& y) const {
  auto a = signed_index(x), b = signed_index(y);
  if (!a || !b) return 0;
  return n_table[*a][*b];
}

ChevalleyBasis build_chevalley(const RootSystem& rs) {
  ChevalleyBasis cb;
  cb.dual = build_root_system(dual_datum(rs.datum));
  cb.npos = cb.dual.num_positive();
  require(cb.npos == rs.num_positive(), "dual system size mismatch");

  NBuilder nb(cb.dual);
  nb.build();

  int total = 2 * cb.npos;
  cb.n_table.assign(total, std::vector<long long>(total, 0));
  for (int a = 0; a < total; ++a) {
    IVec va = cb.signed_vector(a);
    for (int b = 0; b < total; ++b) {
      IVec vb = cb.signed_vector(b);
      Rat n = nb.eval(va, vb);
      require(n.get_den() == 1, "non-integral structure constant in table");
      cb.n_table[a][b] = static_cast<long long>(n.get_num().get_si());
      require(std::llabs(cb.n_table[a][b]) <= 3, "structure constant out of range");
    }
  }
  // Antisymmetry and the p+1 magnitude rule.
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      require(cb.n_table[a][b] == -cb.n_table[b][a], "structure constants not antisymmetric");
      IVec s = vec_add(cb.signed_vector(a), cb.signed_vector(b));
      if (cb.dual.is_root(s)) {
        long long expect = nb.pstring(cb.signed_vector(a), cb.signed_vector(b)) + 1;
        require(std::llabs(cb.n_table[a][b]) == expect, "structure constant magnitude rule violated");
      }
    }
  return cb;
}

bool DualElement::is_zero() const {
  for (const auto& c : cartan)
    if (!c.is_zero()) return false;
  for (const auto& [k, c] : root)
    if (!c.is_zero()) return false;
  return true;
}

DualElement dual_zero(const ChevalleyBasis& cb) {
  DualElement e;
  e.cartan.assign(cb.dual.rank, Poly(1));
  return e;
}

DualElement add(const DualElement& x, const DualElement& y) {
  DualElement r = x;
  for (std::size_t j = 0; j < r.cartan.size(); ++j) r.cartan[j] += y.cartan[j];
  for (auto& [k, c] : y.root) {
    auto [it, inserted] = r.root.emplace(k, c);
    if (!inserted) it->second += c;
  }
  return r;
}

DualElement scale(const DualElement& x, const Rat& c) {
  DualElement r = x;
  for (auto& p : r.cartan) p *= c;
  for (auto& [k, p] : r.root) p *= c;
  return r;
}

DualElement bracket(const ChevalleyBasis& cb, const DualElement& x, const DualElement& y) {
  DualElement r = dual_zero(cb);
  int rank = cb.dual.rank;
  // Value of the root b on the Cartan coordinates h: sum_j h_j * b(t_j).
  auto root_value = [&](int b, const std::vector<Poly>& h) {
    IVec v = cb.signed_vector(b);
    Poly val(1);
    for (int j = 0; j < rank; ++j) {
      long long pair = cb.dual.root_on_simple_coroot(v, j);
      if (pair != 0) val += h[j] * Rat(static_cast<long>(pair));
    }
    return val;
  };
  auto add_root = [&](int k, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = r.root.emplace(k, c);
    if (!inserted) it->second += c;
  };
  // [Cartan(x), root(y)] and [root(x), Cartan(y)]
  for (auto& [b, c] : y.root) add_root(b, root_value(b, x.cartan) * c);
  for (auto& [a, c] : x.root) add_root(a, -(root_value(a, y.cartan) * c));
  // [root(x), root(y)]
  for (auto& [a, ca] : x.root) {
    if (ca.is_zero()) continue;
    for (auto& [b, cab] : y.root) {
      if (cab.is_zero()) continue;
      if (b == cb.negate(a)) {
        // [x_g, x_{-g}] = t_g
        int pos = cb.is_positive(a) ? a : b;
        Rat sign = cb.is_positive(a) ? Rat(1) : Rat(-1);
        const IVec& t = cb.dual.coroots[pos];
        Poly c = ca * cab;
        for (int j = 0; j < rank; ++j)
          if (t[j] != 0) r.cartan[j] += c * (sign * Rat(static_cast<long>(t[j])));
        continue;
      }
      long long n = cb.n_table[a][b];
      if (n == 0) continue;
      IVec s = vec_add(cb.signed_vector(a), cb.signed_vector(b));
      auto idx = cb.signed_index(s);
      require(idx.has_value(), "nonzero N on a non-root sum");
      add_root(*idx, ca * cab * Rat(static_cast<long>(n)));
    }
  }
  // Drop zero entries for compactness.
  for (auto it = r.root.begin(); it != r.root.end();) {
    if (it->second.is_zero())
      it = r.root.erase(it);
    else
      ++it;
  }
  return r;
}

DualElement principal_e(const ChevalleyBasis& cb) {
  DualElement e = dual_zero(cb);
  for (int i = 0; i < cb.dual.rank; ++i) e.root[i] = Poly::constant(1, Rat(1));
  return e;
}

DualElement principal_f(const ChevalleyBasis& cb) {
  DualElement f = dual_zero(cb);
  for (int i = 0; i < cb.dual.rank; ++i) f.root[cb.npos + i] = Poly::constant(1, Rat(1));
  return f;
}

DualElement ad_power(const ChevalleyBasis& cb, const DualElement& x, const DualElement& v, int k) {
  require(k >= 0, "ad power needs k >= 0");
  DualElement cur = v;
  for (int t = 0; t < k; ++t) cur = bracket(cb, x, cur);
  return cur;
}

int nilpotency_index(const ChevalleyBasis& cb, const DualElement& x, const DualElement& v, int cap) {
  DualElement cur = v;
  for (int k = 0; k <= cap; ++k) {
    if (cur.is_zero()) return k;
    cur = bracket(cb, x, cur);
  }
  return cap + 1;
}

DualElement embed_weight_vector(const ChevalleyBasis& cb, const RootSystem& rs,
                                const std::vector<Poly>& coeffs) {
  auto inv = inverse_cartan(rs.datum);
  DualElement r = dual_zero(cb);
  for (int j = 0; j < rs.rank; ++j) {
    Poly acc(1);
    for (int i = 0; i < rs.rank; ++i)
      if (!is_zero(inv[j][i])) acc += coeffs[i] * inv[j][i];
    r.cartan[j] = acc;
  }
  return r;
}

IdentityReport verify_jacobi(const ChevalleyBasis& cb) {
  IdentityReport rep;
  int rank = cb.dual.rank;
  int total = 2 * cb.npos;
  std::vector<DualElement> basis;
  for (int j = 0; j < rank; ++j) {
    DualElement t = dual_zero(cb);
    t.cartan[j] = Poly::constant(1, Rat(1));
    basis.push_back(t);
  }
  for (int a = 0; a < total; ++a) {
    DualElement x = dual_zero(cb);
    x.root[a] = Poly::constant(1, Rat(1));
    basis.push_back(x);
  }
  int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j; k < n; ++k) {
        DualElement s = add(
            add(bracket(cb, bracket(cb, basis[i], basis[j]), basis[k]),
                bracket(cb, bracket(cb, basis[j], basis[k]), basis[i])),
            bracket(cb, bracket(cb, basis[k], basis[i]), basis[j]));
        ++rep.checked;
        if (!s.is_zero())
          rep.failures.push_back("jacobi failed on basis triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
      }
  return rep;
}

IdentityReport verify_72_identities(const ChevalleyBasis& cb) {
  IdentityReport rep;
  const RootSystem& d = cb.dual;
  int rank = d.rank;
  require(!(d.datum.family == 'G'), "identity battery excludes G2");
  auto N = [&](const IVec& x, const IVec& y) { return cb.n_of_vec(x, y); };
  auto fail = [&](const std::string& which, int alpha, int g, const std::string& extra = "") {
    rep.failures.push_back("identity (" + which + ") failed at alpha=" + std::to_string(alpha + 1) +
                           ", gamma idx " + std::to_string(g) + extra);
  };
  for (int ai = 0; ai < rank; ++ai) {
    IVec av = d.roots[ai];
    IVec mav = vec_neg(av);
    for (int g = 0; g < d.num_positive(); ++g) {
      const IVec& gv = d.roots[g];
      long long pairing = d.root_on_simple_coroot(gv, ai);  // alpha_i(gamma-check)
      if (pairing < 0) {
        // (i) N_{a,g} N_{-a, a+g} = -alpha(gamma-check)
        long long lhs = N(av, gv) * N(mav, vec_add(av, gv));
        ++rep.checked;
        if (lhs != -pairing) fail("i", ai, g);
      } else if (pairing > 0) {
        if (gv != av) {  // gamma = alpha is the degenerate s-triple case
          long long lhs = N(mav, gv) * N(av, vec_add(mav, gv));
          ++rep.checked;
          if (lhs != pairing) fail("ii", ai, g);
        }
      } else {
        // (iii) both vanish unless both coroots are short
        bool both_short = d.root_is_short(av) && d.root_is_short(gv);
        ++rep.checked;
        if (!both_short && (N(av, gv) != 0 || N(mav, gv) != 0)) fail("iii", ai, g);
      }
      // (iv) over distinct beta.  gamma = beta is excluded: there the inner
      // bracket degenerates to a Cartan term and the identity is replaced by
      // the s-triple relation (i)/(ii).
      for (int bi = 0; bi < rank; ++bi) {
        if (bi == ai) continue;
        IVec bv = d.roots[bi];
        IVec mbv = vec_neg(bv);
        if (gv != bv) {
          long long lhs = N(av, gv) * N(mbv, vec_add(av, gv));
          long long rhs = N(mbv, gv) * N(av, vec_add(gv, mbv));
          ++rep.checked;
          if (lhs != rhs) fail("iv", ai, g, " beta=" + std::to_string(bi + 1));
        }
        // (v) triple products with delta in pi, gamma = delta excluded for
        // the same reason.
        if (!d.is_root(vec_add(av, gv))) continue;
        if (d.is_root(vec_add(vec_add(av, bv), gv))) continue;
        for (int di = 0; di < rank; ++di) {
          IVec dv = d.roots[di];
          if (gv == dv) continue;
          IVec mdv = vec_neg(dv);
          long long triple =
              N(mdv, gv) * N(av, vec_add(gv, mdv)) * N(bv, vec_add(vec_add(av, gv), mdv));
          ++rep.checked;
          if (di == bi) {
            long long beta_pair = d.root_on_simple_coroot(vec_add(av, gv), bi);
            if (triple != N(av, gv) * beta_pair) fail("v", ai, g, " beta=delta=" + std::to_string(bi + 1));
          } else {
            if (triple != 0) fail("v", ai, g, " delta=" + std::to_string(di + 1));
          }
        }
      }
    }
  }
  return rep;
}

std::vector<int> roots_at_level(const ChevalleyBasis& cb, int r) {
  std::vector<int> out;
  for (int g = 0; g < cb.npos; ++g)
    if (cb.dual.root_height[g] == r) out.push_back(g);
  return out;
}

RatRows build_Mr(const ChevalleyBasis& cb, int r) {
  auto cols = roots_at_level(cb, r);
  RatRows m(cb.dual.rank, RatVec(cols.size(), Rat(0)));
  for (int i = 0; i < cb.dual.rank; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m[i][c] = Rat(static_cast<long>(cb.n_minus_simple(i, cols[c])));
  return m;
}

RatRows level_transfer(const ChevalleyBasis& cb, int r) {
  auto rows_idx = roots_at_level(cb, r);
  auto cols_idx = roots_at_level(cb, r - 1);
  std::map<int, int> col_of;
  for (std::size_t c = 0; c < cols_idx.size(); ++c) col_of[cols_idx[c]] = static_cast<int>(c);
  RatRows m(rows_idx.size(), RatVec(cols_idx.size(), Rat(0)));
  for (std::size_t ri = 0; ri < rows_idx.size(); ++ri) {
    int g = rows_idx[ri];
    for (int i = 0; i < cb.dual.rank; ++i) {
      IVec diff = vec_add(cb.dual.roots[g], vec_neg(cb.dual.roots[i]));
      auto idx = cb.dual.positive_root_index(diff);
      if (!idx) continue;
      auto it = col_of.find(*idx);
      require(it != col_of.end(), "level transfer landed off level");
      m[ri][it->second] += Rat(static_cast<long>(cb.n_minus_simple(i, g)));
    }
  }
  return m;
}

std::string structure_constants_json(const ChevalleyBasis& cb) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int total = 2 * cb.npos;
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      if (cb.n_table[a][b] == 0) continue;
      nlohmann::ordered_json row;
      row["beta"] = cb.signed_vector(a);
      row["gamma"] = cb.signed_vector(b);
      row["N"] = cb.n_table[a][b];
      rows.push_back(row);
    }
  return rows.dump();
}

bool principal_string_check(const ChevalleyBasis& cb, const std::vector<int>& exponents) {
  // Matrix of ad(e) over the basis (t_j, x_a), then kernel dims of powers.
  int rank = cb.dual.rank;
  int total = 2 * cb.npos;
  int dim = rank + total;
  std::vector<DualElement> basis;
  for (int j = 0; j < rank; ++j) {
    DualElement t = dual_zero(cb);
    t.cartan[j] = Poly::constant(1, Rat(1));
    basis.push_back(t);
  }
  for (int a = 0; a < total; ++a) {
    DualElement x = dual_zero(cb);
    x.root[a] = Poly::constant(1, Rat(1));
    basis.push_back(x);
  }
  DualElement e = principal_e(cb);
  RatRows ad(dim, RatVec(dim, Rat(0)));
  for (int c = 0; c < dim; ++c) {
    DualElement img = bracket(cb, e, basis[c]);
    for (int j = 0; j < rank; ++j) ad[j][c] = img.cartan[j].constant_term();
    for (auto& [k, coef] : img.root) ad[rank + k][c] = coef.constant_term();
  }
  auto matmul = [&](const RatRows& x, const RatRows& y) {
    RatRows z(dim, RatVec(dim, Rat(0)));
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) {
        if (is_zero(x[i][k])) continue;
        for (int j = 0; j < dim; ++j)
          if (!is_zero(y[k][j])) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  int maxlen = 0;
  for (int m : exponents) maxlen = std::max(maxlen, 2 * m + 1);
  RatRows power = ad;
  std::vector<int> kdim;
  kdim.push_back(0);
  for (int k = 1; k <= maxlen + 1; ++k) {
    kdim.push_back(dim - rank_of(power));
    power = matmul(power, ad);
  }
  for (int k = 1; k <= maxlen + 1; ++k) {
    int expect = 0;
    for (int m : exponents) expect += std::min(k, 2 * m + 1);
    if (kdim[k] != expect) return false;
  }
  return true;
}

}  // namespace zhelo
