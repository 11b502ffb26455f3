#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "refl/structure.hpp"

using refl::ElemId;
using refl::GroupContext;

TEST_CASE("rank-two group of order 24: structural facts") {
  const GroupContext& ctx = GroupContext::get("g4");
  CHECK(ctx.group().size() == 24);
  CHECK(ctx.num_reflections() == 8);
  REQUIRE(ctx.refl().classes.size() == 2);
  CHECK(ctx.refl().classes[0].size() == 4);
  CHECK(ctx.refl().classes[1].size() == 4);
  CHECK(ctx.refl().num_hyperplanes == 4);
  CHECK(ctx.coxeter().h == 6);
  CHECK(ctx.coxeter().coxeter_elements.size() == 8);
  CHECK(ctx.coxeter().classes.size() == 2);
  CHECK(ctx.is_coxeter(ctx.default_coxeter()));
  // Squaring swaps the two reflection classes.
  for (int r = 0; r < 8; ++r)
    CHECK(ctx.refl_class(ctx.square_idx(r)) == 1 - ctx.refl_class(r));
}

TEST_CASE("rank-two group of order 72: classes and structural maps") {
  const GroupContext& ctx = GroupContext::get("g5");
  CHECK(ctx.group().size() == 72);
  CHECK(ctx.num_reflections() == 16);
  REQUIRE(ctx.refl().classes.size() == 4);
  for (const auto& cls : ctx.refl().classes) CHECK(cls.size() == 4);
  CHECK(ctx.refl().num_hyperplanes == 8);
  CHECK(ctx.coxeter().h == 12);

  const refl::G5Structure& s = ctx.g5();
  for (int r = 0; r < 16; ++r) {
    int cls = ctx.refl_class(r);
    // Squaring pairs classes 1<->3 and 2<->4; adjacency pairs 1<->2 and
    // 3<->4; the semi-square lives in the non-adjacent class.
    CHECK(ctx.refl_class(s.square_of[r]) == (cls ^ 2));
    CHECK(ctx.refl_class(s.adjacent_of[r]) == (cls ^ 1));
    CHECK(ctx.refl_class(s.semisquare_of[r]) == (cls ^ 3));
    // Adjacent pairs commute and share their non-unit eigenvalue.
    CHECK(ctx.commutes(r, s.adjacent_of[r]));
    CHECK(s.adjacent_of[s.adjacent_of[r]] == r);
    // The square of the semi-square is the adjacent pair.
    CHECK(s.square_of[s.semisquare_of[r]] == s.adjacent_of[r]);
    // Commuting set = {t, t^2, adjacent, semi-square}, pairwise commuting.
    std::array<int, 4> cs = s.commuting_set_of[r];
    std::array<int, 4> expect{r, s.square_of[r], s.adjacent_of[r],
                              s.semisquare_of[r]};
    std::sort(expect.begin(), expect.end());
    CHECK(cs == expect);
    for (int x : cs)
      for (int y : cs) CHECK(ctx.commutes(x, y));
  }
}

TEST_CASE("order-72 group contains two order-24 reflection subgroups") {
  const GroupContext& ctx = GroupContext::get("g5");
  auto [h1, h2] = ctx.g4_subgroups_of_g5();
  CHECK(h1.size() == 24);
  CHECK(h2.size() == 24);
  std::set<ElemId> r13, r24;
  for (ElemId e : ctx.refl().classes[0]) r13.insert(e);
  for (ElemId e : ctx.refl().classes[2]) r13.insert(e);
  for (ElemId e : ctx.refl().classes[1]) r24.insert(e);
  for (ElemId e : ctx.refl().classes[3]) r24.insert(e);
  std::set<ElemId> refl1, refl2;
  for (ElemId e : h1)
    if (ctx.refl_index(e) >= 0) refl1.insert(e);
  for (ElemId e : h2)
    if (ctx.refl_index(e) >= 0) refl2.insert(e);
  CHECK(refl1 == r13);
  CHECK(refl2 == r24);
}

TEST_CASE("rank-three group of order 648: classes and triples") {
  const GroupContext& ctx = GroupContext::get("g25");
  CHECK(ctx.group().size() == 648);
  CHECK(ctx.num_reflections() == 24);
  REQUIRE(ctx.refl().classes.size() == 2);
  CHECK(ctx.refl().classes[0].size() == 12);
  CHECK(ctx.refl().classes[1].size() == 12);
  CHECK(ctx.refl().num_hyperplanes == 12);
  CHECK(ctx.coxeter().h == 12);

  const refl::G25Structure& s = ctx.g25();
  REQUIRE(s.triples.size() == 8);
  std::array<int, 2> per_class{0, 0};
  for (size_t t = 0; t < s.triples.size(); ++t) {
    const auto& tri = s.triples[t];
    int cls = ctx.refl_class(tri[0]);
    ++per_class[cls];
    for (int x : tri) {
      CHECK(ctx.refl_class(x) == cls);
      CHECK(s.triple_of[x] == static_cast<int>(t));
      for (int y : tri) CHECK(ctx.commutes(x, y));
    }
    // The inverse triple is the other-class triple of the inverses, and
    // its union with this one is a six-element commuting set.
    int it = s.inverse_triple_of[t];
    CHECK(s.inverse_triple_of[it] == static_cast<int>(t));
    CHECK(ctx.refl_class(s.triples[it][0]) == 1 - cls);
    std::set<int> inverses;
    for (int x : tri)
      inverses.insert(ctx.refl_index(ctx.group().inv(ctx.refl_elem(x))));
    CHECK(inverses ==
          std::set<int>(s.triples[it].begin(), s.triples[it].end()));
    for (int x : tri)
      for (int y : s.triples[it]) CHECK(ctx.commutes(x, y));
  }
  CHECK(per_class == std::array<int, 2>{4, 4});
}

TEST_CASE("coxeter elements have a primitive h-th root eigenvalue") {
  for (const char* name : {"g4", "g5", "g25"}) {
    const GroupContext& ctx = GroupContext::get(name);
    int h = ctx.coxeter().h;
    for (ElemId c : ctx.coxeter().coxeter_elements)
      CHECK(ctx.group().element_order(c) % h == 0);
    CHECK(ctx.is_coxeter(ctx.default_coxeter()));
    CHECK_FALSE(ctx.is_coxeter(0));
  }
}

TEST_CASE("element queries expose consistent records") {
  const GroupContext& ctx = GroupContext::get("g4");
  refl::ElementRecord rec = ctx.element_query(ctx.group().id_of("A"));
  CHECK(rec.name == "A");
  CHECK(rec.order == 3);
  CHECK(rec.class_label == "R1");
  CHECK(rec.inverse_name == "A2");
  CHECK(rec.square_name == "A2");
  refl::ElementRecord cox = ctx.element_query(ctx.default_coxeter());
  CHECK(cox.class_label.starts_with("C"));
}

TEST_CASE("shared context instances are cached") {
  const GroupContext& a = GroupContext::get("g4");
  const GroupContext& b = GroupContext::get("g4");
  CHECK(&a == &b);
  CHECK_THROWS_AS(GroupContext::get("g99"), std::invalid_argument);
}
