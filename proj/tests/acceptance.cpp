// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion.  Exact arithmetic throughout; the
// tolerance everywhere is identically zero.

#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "zhelo/context.hpp"

using namespace zhelo;

namespace {

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "B2", "B3",
                                            "B4", "C3", "C4", "D4", "F4", "G2"};

std::map<std::string, std::unique_ptr<TypeContext>> g_ctx;

TypeContext& ctx(const std::string& tag) {
  auto it = g_ctx.find(tag);
  if (it == g_ctx.end()) it = g_ctx.emplace(tag, std::make_unique<TypeContext>(tag)).first;
  return *it->second;
}

Poly random_poly(std::mt19937_64& rng, int nv, int max_deg) {
  Poly p(nv);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(0, max_deg);
  for (int t = 0; t < 8; ++t) {
    Expo e{};
    int left = max_deg;
    for (int v = 0; v < nv; ++v) {
      int x = expo(rng) % (left + 1);
      e[v] = static_cast<std::uint8_t>(x);
      left -= x;
    }
    p.add_term(e, Rat(coeff(rng)));
  }
  return p;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome criterion_bgg_laws() {
  Outcome out;
  std::mt19937_64 rng(20260810);
  for (const auto& tag : kAllTypes) {
    const RootSystem& rs = ctx(tag).root_system();
    auto w1 = rs.longest_word(false);
    auto w2 = rs.longest_word(true);
    for (int t = 0; t < 50; ++t) {
      Poly q = random_poly(rng, rs.rank, 6);
      for (int i = 0; i < rs.rank; ++i) {
        if (!bgg_apply(rs, i, bgg_apply(rs, i, q)).is_zero()) {
          out.pass = false;
          out.detail = tag + ": A_i^2 != 0";
          return out;
        }
      }
      if (t % 2 == 0) {
        Poly g = random_poly(rng, rs.rank, 5);
        for (int i = 0; i < rs.rank; ++i) {
          Poly lhs = bgg_apply(rs, i, q * g);
          Poly rhs = weyl_act(rs, i, q) * bgg_apply(rs, i, g) + bgg_apply(rs, i, q) * g;
          if (lhs != rhs) {
            out.pass = false;
            out.detail = tag + ": skew Leibniz failed";
            return out;
          }
        }
      }
      if (bgg_word_apply(rs, w1, q) != bgg_word_apply(rs, w2, q)) {
        out.pass = false;
        out.detail = tag + ": longest-element words disagree";
        return out;
      }
    }
  }
  out.detail = "A_i^2 = 0, skew Leibniz, braid words agree (50 random polynomials per type)";
  return out;
}

Outcome criterion_exponents() {
  Outcome out;
  const std::map<std::string, std::vector<int>> expect = {
      {"A1", {1}},          {"A2", {1, 2}},        {"A3", {1, 2, 3}},
      {"A4", {1, 2, 3, 4}}, {"B2", {1, 3}},        {"B3", {1, 3, 5}},
      {"B4", {1, 3, 5, 7}}, {"C3", {1, 3, 5}},     {"C4", {1, 3, 5, 7}},
      {"D4", {1, 3, 3, 5}}, {"F4", {1, 5, 7, 11}}, {"G2", {1, 5}}};
  for (const auto& [tag, exps] : expect) {
    TypeContext& c = ctx(tag);
    if (c.root_system().exponents() != exps) {
      out.pass = false;
      out.detail = tag + ": exponent table mismatch";
      return out;
    }
    const auto& ring = c.invariants();
    for (std::size_t i = 0; i < ring.degrees.size(); ++i)
      if (ring.degrees[i] != exps[i] + 1) {
        out.pass = false;
        out.detail = tag + ": invariant degree != exponent + 1";
        return out;
      }
  }
  out.detail = "dual partitions match the tables and the invariant degrees";
  return out;
}

Outcome criterion_generators() {
  Outcome out;
  for (const auto& tag : kAllTypes) {
    TypeContext& c = ctx(tag);
    const auto& gens = c.generators();
    const auto& exps = c.root_system().exponents();
    if (gens.size() != exps.size()) {
      out.pass = false;
      out.detail = tag + ": wrong number of generator tuples";
      return out;
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (gens[k].m != exps[k]) {
        out.pass = false;
        out.detail = tag + ": generator degree mismatch";
        return out;
      }
      if (!check_invariant(c.root_system(), gens[k].q).invariant()) {
        out.pass = false;
        out.detail = tag + ": assembled invariant fails the fixed-point check";
        return out;
      }
    }
  }
  out.detail = "one generator per exponent; all pass the localized fixed-point check exactly";
  return out;
}

Outcome criterion_census() {
  Outcome out;
  const std::map<std::string, std::vector<int>> levels = {
      {"F4", {4, 4, 5, 6, 5, 4, 4, 4, 3, 2, 1}},
      {"B3", {3, 3, 3, 2, 1}},
      {"A4", {4, 3, 2, 1}},
      {"D4", {4, 3, 3, 1, 1}},
      {"B4", {4, 4, 4, 4, 3, 2, 1}},
      {"C4", {4, 4, 4, 4, 3, 2, 1}}};
  for (const auto& [tag, lv] : levels) {
    TypeContext& c = ctx(tag);
    const auto& g = c.monoid();
    std::vector<int> got(g.level_counts.begin() + 1, g.level_counts.end());
    if (got != lv) {
      out.pass = false;
      out.detail = tag + ": level census mismatch";
      return out;
    }
  }
  // F4: the maximal element is the unique class killed by every operator.
  {
    TypeContext& c = ctx("F4");
    const auto& rs = c.root_system();
    auto& cs = c.coinvariants();
    const auto& g = c.monoid();
    if (g.verts.size() != 42) {
      out.pass = false;
      out.detail = "F4 monoid size != 42";
      return out;
    }
    for (const auto& v : g.verts) {
      bool killed = true;
      for (int i = 0; i < rs.rank; ++i)
        killed = killed && cs.reduce(bgg_apply(rs, i, v.rep)).is_zero();
      if (killed != (v.level == 11)) {
        out.pass = false;
        out.detail = "F4: maximal element is not the unique all-killed class";
        return out;
      }
    }
  }
  // B3 verbatim listing.
  {
    TypeContext& c = ctx("B3");
    const auto& rs = c.root_system();
    auto& cs = c.coinvariants();
    const auto& g = c.monoid();
    const std::map<int, std::vector<std::vector<int>>> listing = {
        {5, {{1, 2, 3, 2, 1}}},
        {4, {{1, 2, 3, 2}, {2, 3, 2, 1}}},
        {3, {{1, 2, 3}, {2, 3, 2}, {3, 2, 1}}},
        {2, {{1, 2}, {2, 3}, {3, 2}}},
        {1, {{1}, {2}, {3}}}};
    for (const auto& [len, words] : listing) {
      std::set<int> classes;
      for (auto w : words) {
        for (auto& x : w) x -= 1;
        int cls = class_of_word(rs, cs, g, w);
        if (cls < 0 || g.verts[cls].level != len) {
          out.pass = false;
          out.detail = "B3 listing word has wrong class";
          return out;
        }
        classes.insert(cls);
      }
      if (static_cast<int>(classes.size()) != g.level_counts[len]) {
        out.pass = false;
        out.detail = "B3 level population differs from the listing";
        return out;
      }
    }
  }
  out.detail = "F4: 42 elements, levels 4,4,5,6,5,4,4,4,3,2,1; B3 listing verbatim; A4/D4/B4/C4 match";
  return out;
}

Outcome criterion_pmap() {
  Outcome out;
  for (const auto& tag : {"A1", "A2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "F4"}) {
    TypeContext& c = ctx(tag);
    // compute_pmap faults internally if injectivity or the length formula fails
    const auto& image = c.pmap_image();
    const auto& g = c.monoid();
    const auto& rs = c.root_system();
    auto& cs = c.coinvariants();
    const auto& dual = c.chevalley().dual;
    for (int k = 0; k < dual.num_positive(); ++k) {
      if (g.verts[image[k]].level != dual.root_height[k]) {
        out.pass = false;
        out.detail = std::string(tag) + ": P-map length != coroot height";
        return out;
      }
      for (int a = 0; a < rs.rank; ++a) {
        if (dual.root_on_simple_coroot(dual.roots[k], a) != -1) continue;
        Poly img = cs.reduce(bgg_apply(rs, a, g.verts[image[k]].rep));
        if (img.is_zero()) continue;
        Poly rep = img / img.terms().begin()->second;
        int cls = g.find_class(rep, std::max(rep.degree(), 0));
        if (cls < 0 || !g.verts[cls].in_P_image) continue;
        IVec target = dual.roots[k];
        for (int t = 0; t < rs.rank; ++t) target[t] += dual.roots[a][t];
        auto tgt = dual.positive_root_index(target);
        if (!tgt || cls != image[*tgt]) {
          out.pass = false;
          out.detail = std::string(tag) + ": transport property failed";
          return out;
        }
      }
    }
  }
  out.detail = "injective, length = coroot height, transport property at every applicable edge";
  return out;
}

Outcome criterion_structure_constants() {
  Outcome out;
  for (const auto& tag : {"A1", "A2", "A3", "B2", "B3", "C3"}) {
    TypeContext& c = ctx(tag);
    auto jac = verify_jacobi(c.chevalley());
    auto ids = verify_72_identities(c.chevalley());
    if (!jac.ok() || !ids.ok()) {
      out.pass = false;
      out.detail = std::string(tag) + ": structure-constant battery failed";
      return out;
    }
  }
  auto f4 = verify_72_identities(ctx("F4").chevalley());
  if (!f4.ok()) {
    out.pass = false;
    out.detail = "F4 identity battery failed";
    return out;
  }
  out.detail = "identities (i)-(v) exhaustive at rank <= 3 and for all F4 instances; Jacobi exhaustive";
  return out;
}

Outcome criterion_recurrences() {
  // Faithful check of the printed recurrences.  The sum recurrence is
  // provably false at the midpoints of starting bad strings (and their
  // forced propagation along good steps); those exact failures are reported
  // here rather than hidden.  The vanishing statements, divisibility and
  // values elsewhere, leading-term agreement, and path independence all
  // hold.
  Outcome out;
  std::ostringstream note;
  for (const auto& tag : {"A2", "A3", "B3", "C3", "D4", "B4", "C4", "F4"}) {
    TypeContext& c = ctx(tag);
    const auto& rs = c.root_system();
    const auto& cb = c.chevalley();
    const auto& top = c.generators().back();
    PGammaTable table = propagate_P(rs, cb, top.P);  // faults on path disagreement
    PGammaTable table0 = propagate_P(rs, cb, top.P0);
    auto rep = verify_recurrences(rs, cb, table, true);
    auto rep0 = verify_recurrences(rs, cb, table0, false);
    if (!rep.failed_vanishing.empty() || !rep0.failed_vanishing.empty()) {
      out.pass = false;
      out.detail = std::string(tag) + ": a vanishing statement failed";
      return out;
    }
    if (!rep.ok() || !rep0.ok()) {
      out.pass = false;
      note << " " << tag << "(fails at";
      for (int g : rep.failed_recurrence) {
        note << " [";
        for (std::size_t t = 0; t < cb.dual.roots[g].size(); ++t)
          note << (t ? "," : "") << cb.dual.roots[g][t];
        note << "]";
      }
      note << ")";
    }
  }
  out.detail = out.pass
                   ? "printed recurrences hold everywhere"
                   : "vanishing parts and path independence hold; the printed sum recurrence admits "
                     "counterexamples at bad-string midpoints:" +
                         note.str();
  return out;
}

Outcome criterion_level_rank() {
  Outcome out;
  for (const auto& tag : kAllTypes) {
    TypeContext& c = ctx(tag);
    const auto& cb = c.chevalley();
    int maxh = c.root_system().exponents().back();
    for (int r = 2; r <= maxh + 1; ++r) {
      auto cols = roots_at_level(cb, r);
      if (rank_of(build_Mr(cb, r)) != static_cast<int>(cols.size())) {
        out.pass = false;
        out.detail = tag + ": rank M_r != n_r at level " + std::to_string(r);
        return out;
      }
    }
  }
  out.detail = "rank M_r = n_r at every level in every type";
  return out;
}

Outcome criterion_headline() {
  Outcome out;
  for (const auto& tag : kAllTypes) {
    TypeContext& c = ctx(tag);
    auto sym = check_symmetric_kostant(c.root_system(), c.chevalley(), c.invariants());
    auto ana = check_analogue_kostant(c.root_system(), c.chevalley(), c.generators());
    if (!sym.ok() || !ana.ok()) {
      out.pass = false;
      out.detail = tag + ": a nilpotency statement failed";
      return out;
    }
  }
  out.detail = "ad(e)^{m+1} kills every generator vector, and the symmetric-algebra version holds";
  return out;
}

Outcome criterion_descent() {
  Outcome out;
  std::ostringstream detail;
  struct Want {
    const char* tag;
    int m;
  };
  for (const Want& w : {Want{"A3", 3}, Want{"B3", 5}}) {
    TypeContext& c = ctx(w.tag);
    auto rep = adjust_and_check_eq24(c.root_system(), c.chevalley(), c.generators(), w.m);
    if (!rep.pass) {
      out.pass = false;
      out.detail = std::string(w.tag) + ": descent failed";
      return out;
    }
  }
  std::vector<std::string> extra_pass;
  for (const auto& tag : {"A2", "A4", "C3", "D4", "B4", "C4", "F4"}) {
    TypeContext& c = ctx(tag);
    auto rep = adjust_and_check_eq24(c.root_system(), c.chevalley(), c.generators(),
                                     c.root_system().exponents().back());
    if (rep.pass) extra_pass.push_back(tag);
  }
  detail << "A3 (m=3) and B3 (m=5) certified with the telescoped ratio; also passed:";
  for (auto& t : extra_pass) detail << " " << t;
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const std::vector<Item> items = {
      {1, "BGG operator laws", criterion_bgg_laws},
      {2, "exponents", criterion_exponents},
      {3, "Zhelobenko generators", criterion_generators},
      {4, "monoid census", criterion_census},
      {5, "P-map", criterion_pmap},
      {6, "structure constants", criterion_structure_constants},
      {7, "polynomial recurrences", criterion_recurrences},
      {8, "level-matrix ranks", criterion_level_rank},
      {9, "headline nilpotency", criterion_headline},
      {10, "ratio descent", criterion_descent},
  };
  bool all = true;
  int passed = 0;
  for (const auto& item : items) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = item.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << item.id << " (" << item.name
              << ", " << ms << " ms): " << o.detail << "\n";
    std::cout.flush();
    all = all && o.pass;
    passed += o.pass ? 1 : 0;
  }
  std::cout << passed << "/" << items.size() << " criteria passed\n";
  return all ? 0 : 1;
}
