#include <algorithm>

#include "doctest.h"
#include "zhelo/context.hpp"
#include "zhelo/verify.hpp"

using namespace zhelo;

TEST_SUITE("verify") {
  TEST_CASE("A1: both nilpotency statements at the smallest scale") {
    TypeContext ctx("A1");
    const auto& rs = ctx.root_system();
    const auto& cb = ctx.chevalley();
    auto sym = check_symmetric_kostant(rs, cb, ctx.invariants());
    REQUIRE(sym.items.size() == 1);
    CHECK(sym.items[0].m == 1);
    CHECK(sym.items[0].minimal_power == 2);
    CHECK(sym.ok());
    auto ana = check_analogue_kostant(rs, cb, ctx.generators());
    REQUIRE(ana.items.size() == 1);
    CHECK(ana.items[0].m == 1);
    CHECK(ana.items[0].minimal_power == 2);
    CHECK(ana.ok());
  }

  TEST_CASE("A2: the cubic gradient needs exactly the third power") {
    TypeContext ctx("A2");
    auto sym = check_symmetric_kostant(ctx.root_system(), ctx.chevalley(), ctx.invariants());
    REQUIRE(sym.items.size() == 2);
    CHECK(sym.items[1].m == 2);
    CHECK(sym.items[1].minimal_power == 3);  // ad^2 does not kill it
    CHECK(sym.ok());
  }

  TEST_CASE("symmetric nilpotency for every generator, rank <= 3 and G2") {
    for (auto tag : {"A3", "B2", "B3", "C3", "G2"}) {
      TypeContext ctx(tag);
      auto sym = check_symmetric_kostant(ctx.root_system(), ctx.chevalley(), ctx.invariants());
      CHECK(sym.ok());
    }
  }

  TEST_CASE("headline nilpotency for every generator invariant") {
    for (auto tag : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
      TypeContext ctx(tag);
      auto ana = check_analogue_kostant(ctx.root_system(), ctx.chevalley(), ctx.generators());
      REQUIRE(ana.items.size() == static_cast<std::size_t>(ctx.root_system().rank));
      for (std::size_t k = 0; k < ana.items.size(); ++k) {
        CHECK(ana.items[k].pass_main);
        CHECK(ana.items[k].pass_leading);
        CHECK(ana.items[k].pass_translate);
        CHECK(ana.items[k].minimal_power <= ana.items[k].m + 1);
      }
    }
  }

  TEST_CASE("verdicts are invariant under rescaling the nilpotent") {
    TypeContext ctx("B3");
    const auto& rs = ctx.root_system();
    const auto& cb = ctx.chevalley();
    const auto& J = ctx.generators().back();
    std::vector<Poly> evald;
    for (const auto& c : J.q) evald.push_back(eval_srho(c));
    DualElement v = embed_weight_vector(cb, rs, evald);
    DualElement e = principal_e(cb);
    DualElement e7 = scale(e, Rat(7));
    int k1 = nilpotency_index(cb, e, v, J.m + 2);
    int k7 = nilpotency_index(cb, e7, v, J.m + 2);
    CHECK(k1 == k7);
    CHECK(k1 == J.m + 1);
  }

  TEST_CASE("ratio descent with kernel adjustments") {
    {
      TypeContext ctx("A2");
      auto rep = adjust_and_check_eq24(ctx.root_system(), ctx.chevalley(), ctx.generators(), 2);
      CHECK(rep.pass);
      CHECK(rep.adjusted_levels == std::vector<int>{1});
    }
    {
      TypeContext ctx("A3");
      auto rep = adjust_and_check_eq24(ctx.root_system(), ctx.chevalley(), ctx.generators(), 3);
      CHECK(rep.pass);
      CHECK(rep.adjusted_levels == std::vector<int>{2, 1});
    }
    {
      TypeContext ctx("B3");
      auto rep = adjust_and_check_eq24(ctx.root_system(), ctx.chevalley(), ctx.generators(), 5);
      CHECK(rep.pass);
      CHECK(rep.adjusted_levels == std::vector<int>{3, 1});
      // final ratio is the telescoped product prod_{r=2..5} (1+sr)/(sr);
      // its denominator is 120 s^4 after reduction
      Poly den = rep.final_ratio.den;
      CHECK(den.degree() == 4);
    }
    {
      // the all-ones generator descends trivially
      TypeContext ctx("B3");
      auto rep = adjust_and_check_eq24(ctx.root_system(), ctx.chevalley(), ctx.generators(), 1);
      CHECK(rep.pass);
      CHECK(rep.adjusted_levels.empty());
    }
  }

  TEST_CASE("generator counting against the level multiset") {
    for (auto tag : {"A2", "A3", "B3", "C3", "D4", "G2"}) {
      TypeContext ctx(tag);
      auto rep = check_generator_counting(ctx.root_system(), ctx.chevalley(), ctx.generators());
      if (!rep.pass)
        for (auto& n : rep.notes) MESSAGE(n);
      CHECK(rep.pass);
    }
    // dropping a generator must break the count
    TypeContext ctx("A2");
    auto gens = ctx.generators();
    gens.pop_back();
    auto rep = check_generator_counting(ctx.root_system(), ctx.chevalley(), gens);
    CHECK_FALSE(rep.pass);
  }
}
