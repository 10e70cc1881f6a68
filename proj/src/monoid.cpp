#include "zhelo/monoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace zhelo {

namespace {

IVec vec_add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

IVec vec_sub(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

IVec vec_scale(const IVec& a, long long s) {
  IVec c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = s * a[k];
  return c;
}

// Divides by the coefficient of the leading monomial, making classes
// canonical up to the scalar ambiguity.
Poly scalar_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.terms().begin()->second;
}

}  // namespace

PairClass classify_pair(const ChevalleyBasis& cb, int alpha, int gamma) {
  const RootSystem& d = cb.dual;
  require(d.datum.family != 'G', "pair classification is not defined for G2");
  PairClass pc;
  long long val = d.root_on_simple_coroot(d.roots[gamma], alpha);  // alpha(gamma)
  if (val == -1) {
    pc.kind = PairKind::Good;
    return pc;
  }
  if (val != -2) return pc;
  // alpha must be the unique simple coroot d with 2 alpha + gamma - d a coroot.
  IVec top = vec_add(d.roots[gamma], vec_scale(d.roots[alpha], 2));
  if (!d.is_root(top)) return pc;
  int matches = 0;
  bool self_match = false;
  for (int t = 0; t < d.rank; ++t) {
    if (d.is_root(vec_sub(top, d.roots[t]))) {
      ++matches;
      if (t == alpha) self_match = true;
    }
  }
  if (matches != 1 || !self_match) return pc;
  if (d.root_height[gamma] == 1) {
    pc.kind = PairKind::StartingBad;
    pc.companion = gamma;  // gamma is a simple index
    return pc;
  }
  pc.kind = PairKind::IntermediateBad;
  // Companion: neighbour beta of alpha with beta(gamma) = 2.
  int found = -1;
  for (int b = 0; b < d.rank; ++b) {
    if (b == alpha) continue;
    if (d.datum.a[alpha][b] == 0) continue;  // not a neighbour
    if (d.root_on_simple_coroot(d.roots[gamma], b) == 2) {
      require(found < 0, "intermediate bad pair has two companion candidates");
      found = b;
    }
  }
  require(found >= 0, "intermediate bad pair without companion");
  pc.companion = found;
  return pc;
}

std::vector<Step> predecessor_steps(const ChevalleyBasis& cb, int gamma) {
  const RootSystem& d = cb.dual;
  std::vector<Step> steps;
  for (int a = 0; a < d.rank; ++a) {
    IVec delta1 = vec_sub(d.roots[gamma], d.roots[a]);
    if (auto idx = d.positive_root_index(delta1)) {
      PairClass pc = classify_pair(cb, a, *idx);
      if (pc.kind == PairKind::Good) steps.push_back({a, *idx, PairKind::Good, -1});
    }
    IVec delta2 = vec_sub(d.roots[gamma], vec_scale(d.roots[a], 2));
    if (auto idx = d.positive_root_index(delta2)) {
      PairClass pc = classify_pair(cb, a, *idx);
      if (pc.kind == PairKind::StartingBad || pc.kind == PairKind::IntermediateBad)
        steps.push_back({a, *idx, pc.kind, pc.companion});
    }
  }
  return steps;
}

DecreasingPath decreasing_reflection_path(const ChevalleyBasis& cb, int gamma) {
  const RootSystem& d = cb.dual;
  DecreasingPath path;
  int cur = gamma;
  std::vector<Step> reversed;
  while (d.root_height[cur] > 1) {
    auto steps = predecessor_steps(cb, cur);
    require(!steps.empty(), "positive coroot without a good/bad predecessor");
    // Prefer good steps, then lowest letter; deterministic.
    std::stable_sort(steps.begin(), steps.end(), [](const Step& x, const Step& y) {
      bool xg = x.kind == PairKind::Good, yg = y.kind == PairKind::Good;
      if (xg != yg) return xg > yg;
      return x.alpha < y.alpha;
    });
    reversed.push_back(steps.front());
    cur = steps.front().from;
  }
  path.terminal = cur;  // simple index
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) path.steps.push_back(*it);
  // One reflection per step; a bad step is the single reflection s_alpha
  // raising the height by two.
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) path.word.push_back(it->alpha);
  return path;
}

int MonoidGraph::find_class(const Poly& normalized_rep, int degree) const {
  for (std::size_t k = 0; k < verts.size(); ++k)
    if (verts[k].degree == degree && verts[k].rep == normalized_rep) return static_cast<int>(k);
  return -1;
}

std::vector<Poly> realize_P0(const RootSystem& rs, const InvariantRing& ring, CoinvariantSpace& cs) {
  const Poly& top = ring.gens.back();
  std::vector<Poly> out;
  for (int i = 0; i < rs.rank; ++i) {
    Poly grad = gradient_component(rs, i, top);
    auto div = divide_by_variable(grad, i);
    require(div.has_value(), "divided gradient fails divisibility by h_i");
    Poly cls = cs.reduce(*div);
    require(!cls.is_zero(), "divided gradient class vanishes in the coinvariant algebra");
    out.push_back(cls);
  }
  return out;
}

MonoidGraph enumerate_monoid(const RootSystem& rs, const InvariantRing& ring, CoinvariantSpace& cs) {
  MonoidGraph g;
  auto p0 = realize_P0(rs, ring, cs);
  std::map<std::pair<int, std::string>, int> lookup;
  auto key_of = [](const Poly& rep, int deg) {
    return std::make_pair(deg, rep.to_string());
  };
  auto add_vertex = [&](const Poly& rep, int level, const std::vector<int>& witness) {
    MonoidVertex v;
    v.level = level;
    v.degree = std::max(rep.degree(), 0);
    v.rep = rep;
    v.witness = witness;
    v.support = std::set<int>(witness.begin(), witness.end());
    g.verts.push_back(std::move(v));
    lookup[key_of(rep, g.verts.back().degree)] = static_cast<int>(g.verts.size()) - 1;
    return static_cast<int>(g.verts.size()) - 1;
  };

  g.generator_vertex.assign(rs.rank, -1);
  std::vector<int> frontier;
  for (int i = 0; i < rs.rank; ++i) {
    Poly rep = scalar_normalize(p0[i]);
    auto key = key_of(rep, std::max(rep.degree(), 0));
    auto it = lookup.find(key);
    int idx;
    if (it == lookup.end()) {
      idx = add_vertex(rep, 1, {i});
      frontier.push_back(idx);
    } else {
      idx = it->second;
    }
    g.generator_vertex[i] = idx;
  }

  std::size_t head = 0;
  while (head < frontier.size()) {
    int vi = frontier[head++];
    for (int i = 0; i < rs.rank; ++i) {
      Poly img = cs.reduce(bgg_apply(rs, i, g.verts[vi].rep));
      if (img.is_zero()) continue;
      Poly rep = scalar_normalize(img);
      int deg = std::max(rep.degree(), 0);
      auto key = key_of(rep, deg);
      auto it = lookup.find(key);
      int target;
      std::vector<int> wit = g.verts[vi].witness;
      wit.insert(wit.begin(), i);
      if (it == lookup.end()) {
        target = add_vertex(rep, g.verts[vi].level + 1, wit);
        frontier.push_back(target);
      } else {
        target = it->second;
        require(g.verts[target].level == g.verts[vi].level + 1, "monoid level inconsistency");
        std::set<int> sup(wit.begin(), wit.end());
        require(g.verts[target].support == sup, "monoid support depends on the witness");
      }
      g.edges.push_back({vi, i, target});
    }
  }

  g.max_level = 0;
  for (auto& v : g.verts) g.max_level = std::max(g.max_level, v.level);
  g.level_counts.assign(g.max_level + 1, 0);
  for (auto& v : g.verts) g.level_counts[v.level]++;
  return g;
}

int class_of_word(const RootSystem& rs, CoinvariantSpace& cs, const MonoidGraph& g,
                  const std::vector<int>& witness) {
  require(!witness.empty(), "empty word");
  int gen = witness.back();
  int start = g.generator_vertex[gen];
  Poly cur = g.verts[start].rep;
  for (int k = static_cast<int>(witness.size()) - 2; k >= 0; --k) {
    cur = cs.reduce(bgg_apply(rs, witness[k], cur));
    if (cur.is_zero()) return -1;
  }
  Poly rep = scalar_normalize(cur);
  return g.find_class(rep, std::max(rep.degree(), 0));
}

std::string witness_to_string(const std::vector<int>& witness) {
  std::ostringstream os;
  for (std::size_t k = 0; k + 1 < witness.size(); ++k) os << witness[k] + 1;
  os << "(" << witness.back() + 1 << ")";
  return os.str();
}

std::vector<int> compute_pmap(const RootSystem& rs, const ChevalleyBasis& cb, CoinvariantSpace& cs,
                              MonoidGraph& g) {
  const RootSystem& d = cb.dual;
  std::vector<int> image(d.num_positive(), -1);
  for (int i = 0; i < d.rank; ++i) image[i] = g.generator_vertex[i];
  // Ascending heights; every predecessor step must land on the same class.
  for (int gi = d.rank; gi < d.num_positive(); ++gi) {
    auto steps = predecessor_steps(cb, gi);
    require(!steps.empty(), "no good/bad step reaches this coroot");
    int target = -1;
    for (const auto& st : steps) {
      int from_vertex = image[st.from];
      require(from_vertex >= 0, "predecessor class missing");
      Poly cur = cs.reduce(bgg_apply(rs, st.alpha, g.verts[from_vertex].rep));
      if (st.kind != PairKind::Good) cur = cs.reduce(bgg_apply(rs, st.companion, cur));
      require(!cur.is_zero(), "P-map image class vanished");
      int idx = g.find_class(scalar_normalize(cur), std::max(cur.degree(), 0));
      require(idx >= 0, "P-map image is not a monoid vertex");
      if (target < 0)
        target = idx;
      else
        require(target == idx, "P-map image depends on the path");
    }
    image[gi] = target;
  }
  // Injectivity and the length formula l(P(gamma)) = rho(gamma).
  std::set<int> distinct(image.begin(), image.end());
  require(static_cast<int>(distinct.size()) == d.num_positive(), "P-map is not injective");
  for (int gi = 0; gi < d.num_positive(); ++gi)
    require(g.verts[image[gi]].level == d.root_height[gi], "P-map length differs from coroot height");
  for (auto& v : g.verts) v.in_P_image = false;
  for (int idx : image) g.verts[idx].in_P_image = true;
  return image;
}

PGammaTable propagate_P(const RootSystem& rs, const ChevalleyBasis& cb,
                        const std::vector<Poly>& tuple) {
  const RootSystem& d = cb.dual;
  PGammaTable table;
  table.val.assign(d.num_positive(), Poly(rs.rank));
  for (int i = 0; i < d.rank; ++i) table.val[i] = tuple[i];
  for (int gi = d.rank; gi < d.num_positive(); ++gi) {
    auto steps = predecessor_steps(cb, gi);
    require(!steps.empty(), "no good/bad step reaches this coroot");
    bool have = false;
    Poly value(rs.rank);
    for (const auto& st : steps) {
      Poly cand(rs.rank);
      if (st.kind == PairKind::Good) {
        long long n = cb.n_of(st.alpha, st.from);
        require(n != 0, "vanishing structure constant on a good step");
        cand = bgg_apply(rs, st.alpha, table.val[st.from]) / Rat(static_cast<long>(n));
      } else if (st.kind == PairKind::StartingBad) {
        // A_gamma A_alpha P_gamma = alpha(gamma) N_{gamma,alpha} /
        //                           N_{-alpha, gamma+2alpha} * P_{gamma+2alpha}
        long long pairing = d.root_on_simple_coroot(d.roots[st.from], st.alpha);
        long long n_ga = cb.n_of(st.from, st.alpha);
        long long n_den = cb.n_table[cb.npos + st.alpha][gi];
        require(pairing * n_ga != 0 && n_den != 0, "vanishing scalar on a starting bad step");
        Poly two = bgg_apply(rs, st.companion, bgg_apply(rs, st.alpha, table.val[st.from]));
        cand = two * Rat(static_cast<long>(n_den)) / Rat(static_cast<long>(pairing * n_ga));
      } else {
        // A_beta A_alpha P_gamma = beta(alpha+gamma) N_{alpha,gamma} /
        //                          N_{-alpha, 2alpha+gamma} * P_{gamma+2alpha}
        // The scalar mirrors the starting rule: the denominator pairs the
        // negative simple with the top of the string, which is what the
        // two-step derivation through the recurrence produces.
        IVec mid = vec_add(d.roots[st.from], d.roots[st.alpha]);
        require(d.is_root(mid), "bad step without intermediate coroot");
        long long beta_val = d.root_on_simple_coroot(mid, st.companion);
        long long n_ag = cb.n_of(st.alpha, st.from);
        long long n_den = cb.n_table[cb.npos + st.alpha][gi];
        require(beta_val * n_ag != 0 && n_den != 0, "vanishing scalar on an intermediate bad step");
        Poly two = bgg_apply(rs, st.companion, bgg_apply(rs, st.alpha, table.val[st.from]));
        cand = two * Rat(static_cast<long>(n_den)) / Rat(static_cast<long>(beta_val * n_ag));
      }
      if (!have) {
        value = cand;
        have = true;
      } else {
        require(value == cand, "P_gamma depends on the build path");
      }
    }
    table.val[gi] = value;
  }
  return table;
}

RecurrenceReport verify_recurrences(const RootSystem& rs, const ChevalleyBasis& cb,
                                    const PGammaTable& table, bool translated) {
  const RootSystem& d = cb.dual;
  RecurrenceReport rep;
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };
  for (int gi = d.rank; gi < d.num_positive(); ++gi) {
    // (i)  (c + gamma) P_gamma = sum_alpha N_{-alpha,gamma} P_{gamma-alpha},
    // c = 1 for the translated family and 0 for the leading terms.
    Poly sum(rs.rank);
    for (int a = 0; a < d.rank; ++a) {
      IVec diff = vec_sub(d.roots[gi], d.roots[a]);
      auto idx = d.positive_root_index(diff);
      if (!idx) continue;
      long long n = cb.n_minus_simple(a, gi);
      if (n != 0) sum += table.val[*idx] * Rat(static_cast<long>(n));
    }
    Poly lin = coroot_linear(rs.rank, d.roots[gi], translated ? Rat(1) : Rat(0));
    auto quot = divide_by_linear(sum, lin);
    ++rep.checked;
    if (!quot.has_value()) {
      rep.failed_recurrence.push_back(gi);
      fail("recurrence numerator not divisible at coroot " + std::to_string(gi));
    } else if (*quot != table.val[gi]) {
      rep.failed_recurrence.push_back(gi);
      fail("recurrence value mismatch at coroot " + std::to_string(gi));
    }
  }
  for (int gi = 0; gi < d.num_positive(); ++gi) {
    for (int a = 0; a < d.rank; ++a) {
      long long pairing = d.root_on_simple_coroot(d.roots[gi], a);
      bool sum_is_coroot = d.is_root(vec_add(d.roots[gi], d.roots[a]));
      bool must_vanish;
      if (translated)
        must_vanish = pairing > 0 || (pairing == 0 && !sum_is_coroot);
      else
        must_vanish = !sum_is_coroot;
      if (!must_vanish) continue;
      ++rep.checked;
      if (!bgg_apply(rs, a, table.val[gi]).is_zero()) {
        rep.failed_vanishing.push_back(a * cb.npos + gi);
        fail("A_alpha P_gamma should vanish at (alpha=" + std::to_string(a + 1) + ", coroot " +
             std::to_string(gi) + ")");
      }
    }
  }
  return rep;
}

std::string export_dot(const MonoidGraph& g) {
  // Vertices grouped by level; deterministic ordering throughout.
  std::vector<int> order(g.verts.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (g.verts[x].level != g.verts[y].level) return g.verts[x].level < g.verts[y].level;
    return g.verts[x].witness < g.verts[y].witness;
  });
  std::vector<int> name(g.verts.size());
  for (std::size_t k = 0; k < order.size(); ++k) name[order[k]] = static_cast<int>(k);

  std::ostringstream os;
  os << "digraph zhelobenko_monoid {\n";
  os << "  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n";
  for (int lvl = 1; lvl <= g.max_level; ++lvl) {
    os << "  { rank=same;";
    for (int idx : order)
      if (g.verts[idx].level == lvl) os << " v" << name[idx] << ";";
    os << " }\n";
  }
  for (int idx : order) {
    const auto& v = g.verts[idx];
    os << "  v" << name[idx] << " [label=\"" << witness_to_string(v.witness) << "\""
       << (v.in_P_image ? ", shape=box" : ", shape=ellipse") << "];\n";
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(), [&](const MonoidGraph::Edge& a, const MonoidGraph::Edge& b) {
    if (name[a.from] != name[b.from]) return name[a.from] < name[b.from];
    if (a.letter != b.letter) return a.letter < b.letter;
    return name[a.to] < name[b.to];
  });
  for (const auto& e : edges)
    os << "  v" << name[e.from] << " -> v" << name[e.to] << " [label=\"" << e.letter + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string census_json(const std::string& tag, const MonoidGraph& g) {
  nlohmann::ordered_json j;
  j["type"] = tag;
  std::vector<int> levels(g.level_counts.begin() + 1, g.level_counts.end());
  j["levels"] = levels;
  std::vector<int> order(g.verts.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (g.verts[x].level != g.verts[y].level) return g.verts[x].level < g.verts[y].level;
    return g.verts[x].witness < g.verts[y].witness;
  });
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (int idx : order) {
    const auto& v = g.verts[idx];
    nlohmann::ordered_json jv;
    jv["length"] = v.level;
    std::vector<int> sup(v.support.begin(), v.support.end());
    for (auto& s : sup) s += 1;
    jv["support"] = sup;
    jv["witness"] = witness_to_string(v.witness);
    jv["in_P_image"] = v.in_P_image;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  return j.dump(2);
}

}  // namespace zhelo
