#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "refl/census.hpp"

using refl::Factorization;
using refl::GroupContext;
using refl::Integer;
using refl::Signature;

TEST_CASE("reachability level sets") {
  const GroupContext& ctx = GroupContext::get("g4");
  refl::ReachabilityTable t = refl::reachability(ctx, 4);
  CHECK(t.max_length() == 4);
  CHECK(t.at(0, 0));  // identity at length zero
  CHECK_FALSE(t.at(0, ctx.default_coxeter()));
  for (int r = 0; r < ctx.num_reflections(); ++r)
    CHECK(t.at(1, ctx.refl_elem(r)));
  CHECK(t.at(2, ctx.default_coxeter()));
  CHECK_FALSE(t.at(1, ctx.default_coxeter()));
}

TEST_CASE("enumeration counts match the generating function") {
  struct Row {
    const char* group;
    int m;
    long long expect;
  };
  const Row rows[] = {
      {"g4", 2, 3},  {"g4", 3, 18}, {"g4", 4, 180},
      {"g5", 2, 4},  {"g5", 3, 48}, {"g25", 3, 16}, {"g25", 4, 384},
  };
  for (const Row& row : rows) {
    const GroupContext& ctx = GroupContext::get(row.group);
    auto all =
        refl::enumerate_factorizations(ctx, ctx.default_coxeter(), row.m);
    CHECK(all.size() == static_cast<size_t>(row.expect));
    CHECK(refl::count_via_egf(ctx, row.m) == Integer(row.expect));
    // Every enumerated factorization multiplies back to the target.
    for (size_t i = 0; i < all.size(); i += 17)
      CHECK(refl::product_of(ctx, all[i].parts) == ctx.default_coxeter());
    // Enumeration is strictly ordered, hence duplicate-free.
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("closed form agrees with the generating function") {
  const GroupContext& ctx = GroupContext::get("g4");
  for (int m = 0; m <= 30; ++m)
    CHECK(refl::g4_closed_form(m) == refl::count_via_egf(ctx, m));
  CHECK(refl::g4_closed_form(2) == 3);
  CHECK(refl::g4_closed_form(5) == 1320);
}

TEST_CASE("shortest-orbit sizes n! h^n / |W|") {
  CHECK(refl::bessis_orbit_size(GroupContext::get("g4")) == 3);
  CHECK(refl::bessis_orbit_size(GroupContext::get("g5")) == 4);
  CHECK(refl::bessis_orbit_size(GroupContext::get("g25")) == 16);
}

TEST_CASE("determinant values and the congruence filter") {
  const GroupContext& ctx = GroupContext::get("g4");
  CHECK(refl::det_value(ctx, 0) == 0);
  int a = ctx.group().id_of("A");
  int cls_a = ctx.refl_class(ctx.refl_index(a));
  CHECK(refl::det_value(ctx, a) == ctx.refl().class_value[cls_a]);

  auto sigs = refl::valid_signatures(ctx, ctx.default_coxeter(), 3);
  REQUIRE(sigs.size() == 1);
  CHECK(sigs[0].to_string() == "{1^1,2^2}");
  // Count of admissible class vectors grows by one every three lengths.
  for (int m = 2; m <= 8; ++m)
    CHECK(refl::valid_signatures(ctx, ctx.default_coxeter(), m).size() ==
          static_cast<size_t>((m + 2) / 3));
}

TEST_CASE("length-two census of the order-24 group") {
  const GroupContext& ctx = GroupContext::get("g4");
  refl::CensusReport rep =
      refl::verify_transitivity(ctx, ctx.default_coxeter(), 2);
  CHECK(rep.ok());
  CHECK(rep.total == 3);
  REQUIRE(rep.orbits.size() == 1);
  CHECK(rep.orbits[0].size == 3);
  CHECK(rep.orbits[0].signature.to_string() == "{1^2}");
  CHECK_FALSE(rep.orbits[0].has_square_pair);
}

TEST_CASE("length-four census of the order-24 group") {
  const GroupContext& ctx = GroupContext::get("g4");
  refl::CensusReport rep =
      refl::verify_transitivity(ctx, ctx.default_coxeter(), 4);
  CHECK(rep.ok());
  CHECK(rep.total == 180);
  REQUIRE(rep.orbits.size() == 2);
  size_t sum = 0;
  for (const auto& o : rep.orbits) {
    sum += o.size;
    CHECK(o.has_square_pair);
  }
  CHECK(sum == 180);
  // Realized = admissible for this group.
  CHECK(rep.realized == rep.valid);
}

TEST_CASE("census is independent of the chosen product target") {
  const GroupContext& ctx = GroupContext::get("g4");
  // The signature -> orbit size table is constant within each conjugacy
  // class of targets, and the orbit-size multiset is the same across all.
  using Key = std::map<std::string, size_t>;
  std::map<std::string, Key> per_class;
  std::set<std::multiset<size_t>> size_multisets;
  for (refl::ElemId c : ctx.coxeter().coxeter_elements) {
    refl::CensusReport rep = refl::verify_transitivity(ctx, c, 3);
    CHECK(rep.ok());
    Key table;
    std::multiset<size_t> sizes;
    for (const auto& o : rep.orbits) {
      table[o.signature.to_string()] = o.size;
      sizes.insert(o.size);
    }
    std::string label = ctx.class_label_of(c);
    auto [it, fresh] = per_class.emplace(label, table);
    if (!fresh) CHECK(it->second == table);
    size_multisets.insert(sizes);
  }
  CHECK(per_class.size() == ctx.coxeter().classes.size());
  CHECK(size_multisets.size() == 1);
}

TEST_CASE("length three and four censuses of the order-72 group") {
  const GroupContext& ctx = GroupContext::get("g5");
  refl::CensusReport r3 =
      refl::verify_transitivity(ctx, ctx.default_coxeter(), 3);
  CHECK(r3.ok());
  CHECK(r3.total == 48);
  refl::CensusReport r4 =
      refl::verify_transitivity(ctx, ctx.default_coxeter(), 4);
  CHECK(r4.ok());
  CHECK(r4.total == 960);
  // One orbit per realized signature.
  CHECK(r4.orbits.size() == r4.realized.size());
  // The admissible list is a strict superset here.
  CHECK(r4.valid.size() > r4.realized.size());
}

TEST_CASE("length-five signature census of the order-72 group") {
  const GroupContext& ctx = GroupContext::get("g5");
  refl::G5LengthFiveReport rep =
      refl::g5_signature_census(ctx, ctx.default_coxeter());
  CHECK(rep.ok());
  CHECK(rep.total == 14080);
  CHECK(rep.excluded_pattern_absent);
  CHECK(rep.categories_cover);
  CHECK(rep.det_congruence_holds);
  // No realized signature has sorted class counts {1,1,1,2}.
  for (const Signature& s : rep.realized) {
    std::vector<int> counts;
    for (int c : s.counts)
      if (c > 0) counts.push_back(c);
    std::sort(counts.begin(), counts.end());
    CHECK(counts != std::vector<int>{1, 1, 1, 2});
  }
}

TEST_CASE("ratio report for length four in the order-24 group") {
  const GroupContext& ctx = GroupContext::get("g4");
  refl::RatioReport rep = refl::ratio_report(ctx, ctx.default_coxeter(), 4);
  CHECK(rep.consistent);
  CHECK(rep.total == 180);
  REQUIRE(rep.orbits.size() == 2);
  std::map<std::string, size_t> sizes;
  for (const auto& o : rep.orbits) sizes[o.signature.to_string()] = o.size;
  CHECK(sizes["{1^3,2^1}"] == 144);
  CHECK(sizes["{2^4}"] == 36);
  REQUIRE(rep.lines.size() == 1);
  // 144:36 = 4:1 matches C(4,3):C(4,4) under the transposed reading.
  CHECK(rep.lines[0].transposed_match);
  CHECK_FALSE(rep.lines[0].literal_match);
}

TEST_CASE("rank-three program at the shortest lengths") {
  const GroupContext& ctx = GroupContext::get("g25");
  refl::CensusReport r3 = refl::g25_program(ctx, ctx.default_coxeter(), 3);
  CHECK(r3.ok());
  CHECK(r3.total == 16);
  REQUIRE(r3.orbits.size() == 1);
  CHECK(r3.orbits[0].size == 16);
  refl::CensusReport r4 = refl::g25_program(ctx, ctx.default_coxeter(), 4);
  CHECK(r4.ok());
  CHECK(r4.total == 384);
}

TEST_CASE("the census rejects a non-product-of-reflections target") {
  const GroupContext& ctx = GroupContext::get("g4");
  // Length 1: the target is not a reflection, so no factorizations exist.
  auto none = refl::enumerate_factorizations(ctx, ctx.default_coxeter(), 1);
  CHECK(none.empty());
}
