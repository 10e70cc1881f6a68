#include <map>

#include "doctest.h"
#include "zhelo/rootsys.hpp"

using namespace zhelo;

namespace {

RootSystem make(const std::string& tag) { return build_root_system(parse_type(tag)); }

IVec coroot(std::initializer_list<long long> v) { return IVec(v); }

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("positive root counts match the classical tables") {
    std::map<std::string, int> expect = {
        {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9}, {"B4", 16},
        {"C3", 9},  {"C4", 16}, {"D4", 12}, {"F4", 24}, {"G2", 6},  {"E6", 36}};
    for (auto& [tag, n] : expect) CHECK(make(tag).num_positive() == n);
  }

  TEST_CASE("A2 positive coroots are h1, h2, h1+h2") {
    auto rs = make("A2");
    CHECK(rs.positive_coroot_index(coroot({1, 0})).has_value());
    CHECK(rs.positive_coroot_index(coroot({0, 1})).has_value());
    CHECK(rs.positive_coroot_index(coroot({1, 1})).has_value());
    CHECK(rs.num_positive() == 3);
  }

  TEST_CASE("F4 has 24 positive roots with maximal coroot height 11") {
    auto rs = make("F4");
    CHECK(rs.num_positive() == 24);
    CHECK(rs.coroot_height[rs.highest_coroot_index] == 11);
    // Reverse-Bourbaki labelling: first two simple coroots long.
    CHECK(rs.datum.a[1][2] == -2);
    CHECK(rs.datum.a[2][1] == -1);
    CHECK_FALSE(rs.coroot_is_short(rs.coroots[0]));
    CHECK_FALSE(rs.coroot_is_short(rs.coroots[1]));
    CHECK(rs.coroot_is_short(rs.coroots[2]));
    CHECK(rs.coroot_is_short(rs.coroots[3]));
  }

  TEST_CASE("coroot level counts are weakly decreasing and sum to the root count") {
    for (auto tag : {"A4", "B4", "C4", "D4", "F4", "G2", "B3"}) {
      auto rs = make(tag);
      int total = 0;
      int prev = 1 << 20;
      for (std::size_t r = 1; r < rs.coroot_level_count.size(); ++r) {
        int n = rs.coroot_level_count[r];
        total += n;
        CHECK(n <= prev);
        prev = n;
      }
      CHECK(total == rs.num_positive());
    }
  }

  TEST_CASE("B4 coroot level counts") {
    // The coroots of B4 form a C4 system; heights count (4,3,3,2,2,1,1).
    auto rs = make("B4");
    std::vector<int> got(rs.coroot_level_count.begin() + 1, rs.coroot_level_count.end());
    CHECK(got == std::vector<int>{4, 3, 3, 2, 2, 1, 1});
  }

  TEST_CASE("exponents match the classical tables") {
    std::map<std::string, std::vector<int>> expect = {
        {"A1", {1}},          {"A2", {1, 2}},       {"A3", {1, 2, 3}},
        {"A4", {1, 2, 3, 4}}, {"B2", {1, 3}},       {"B3", {1, 3, 5}},
        {"B4", {1, 3, 5, 7}}, {"C3", {1, 3, 5}},    {"C4", {1, 3, 5, 7}},
        {"D4", {1, 3, 3, 5}}, {"F4", {1, 5, 7, 11}}, {"G2", {1, 5}}};
    for (auto& [tag, exps] : expect) CHECK(make(tag).exponents() == exps);
  }

  TEST_CASE("the E-series code paths build correctly") {
    auto e6 = make("E6");
    CHECK(e6.num_positive() == 36);
    CHECK(e6.exponents() == std::vector<int>{1, 4, 5, 7, 8, 11});
    auto e7 = make("E7");
    CHECK(e7.num_positive() == 63);
    CHECK(e7.exponents() == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
    auto e8 = make("E8");
    CHECK(e8.num_positive() == 120);
    CHECK(e8.exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
    // D5/B5/C5 parametric paths
    CHECK(make("D5").num_positive() == 20);
    CHECK(make("B5").exponents() == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(make("C5").exponents() == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(make("A5").exponents() == std::vector<int>{1, 2, 3, 4, 5});
  }

  TEST_CASE("simple reflections negate their own coroot") {
    for (auto tag : {"A2", "B3", "F4", "G2"}) {
      auto rs = make(tag);
      for (int i = 0; i < rs.rank; ++i) {
        IVec hi(rs.rank, 0);
        hi[i] = 1;
        IVec img = rs.reflect_coroot(i, hi);
        for (int k = 0; k < rs.rank; ++k) CHECK(img[k] == (k == i ? -1 : 0));
        CHECK(rs.reflect_coroot(i, img) == hi);  // involution
      }
    }
  }

  TEST_CASE("A2: s1(h2) = h1 + h2") {
    auto rs = make("A2");
    CHECK(rs.reflect_coroot(0, coroot({0, 1})) == coroot({1, 1}));
  }

  TEST_CASE("B2 reflections against the explicit epsilon realization") {
    // alpha_1 = e1-e2 (long), alpha_2 = e2 (short); h1 = e1-e2, h2 = 2 e2.
    // s2 fixes e1 and negates e2, s1 swaps e1 and e2.
    auto rs = make("B2");
    CHECK(rs.datum.a[1][0] == -2);  // alpha_1(h_2) = -2
    CHECK(rs.datum.a[0][1] == -1);
    // s2(h1) = e1+e2 = h1 + h2
    CHECK(rs.reflect_coroot(1, coroot({1, 0})) == coroot({1, 1}));
    // s1(h2) = 2 e1 = 2 h1 + h2
    CHECK(rs.reflect_coroot(0, coroot({0, 1})) == coroot({2, 1}));
  }

  TEST_CASE("reflections permute the coroots and preserve the norm") {
    for (auto tag : {"B3", "F4", "G2", "D4"}) {
      auto rs = make(tag);
      for (int j = 0; j < rs.rank; ++j)
        for (int k = 0; k < rs.num_positive(); ++k) {
          IVec img = rs.reflect_coroot(j, rs.coroots[k]);
          CHECK(rs.is_coroot(img));
          CHECK(rs.coroot_norm2(img) == rs.coroot_norm2(rs.coroots[k]));
        }
    }
  }

  TEST_CASE("Weyl group orders") {
    CHECK(make("A2").weyl_order() == 6);
    CHECK(make("B2").weyl_order() == 8);
    CHECK(make("G2").weyl_order() == 12);
    CHECK(make("A3").weyl_order() == 24);
    CHECK(make("B3").weyl_order() == 48);
    CHECK(make("D4").weyl_order() == 192);
    CHECK(make("F4").weyl_order() == 1152);
  }

  TEST_CASE("the two greedy longest words agree as group elements") {
    for (auto tag : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
      auto rs = make(tag);
      auto w1 = rs.longest_word(false);
      auto w2 = rs.longest_word(true);
      CHECK(static_cast<int>(w1.size()) == rs.num_positive());
      CHECK(rs.element_from_word(w1).mat == rs.element_from_word(w2).mat);
    }
  }

  TEST_CASE("inverse Cartan of A2") {
    auto inv = inverse_cartan(parse_type("A2"));
    CHECK(inv[0][0] == Rat(2, 3));
    CHECK(inv[0][1] == Rat(1, 3));
    CHECK(inv[1][0] == Rat(1, 3));
    CHECK(inv[1][1] == Rat(2, 3));
  }

  TEST_CASE("dual datum transposes the Cartan matrix") {
    auto cd = parse_type("B3");
    auto dd = dual_datum(cd);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(dd.a[i][j] == cd.a[j][i]);
    // Coroots of B3 form a C3 system: one long "root" (the doubled one).
    auto dual = build_root_system(dd);
    CHECK(dual.num_positive() == 9);
  }

  TEST_CASE("highest roots") {
    auto b2 = make("B2");
    CHECK(b2.roots[b2.highest_root_index] == coroot({1, 2}));
    auto a2 = make("A2");
    CHECK(a2.roots[a2.highest_root_index] == coroot({1, 1}));
  }

  TEST_CASE("bad type tags are rejected") {
    CHECK_THROWS(parse_type("H3"));
    CHECK_THROWS(parse_type("A0"));
    CHECK_THROWS(parse_type("F5"));
    CHECK_THROWS(parse_type("G3"));
    CHECK_THROWS(parse_type(""));
    CHECK_THROWS(parse_type("Bx"));
  }
}
