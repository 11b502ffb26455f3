// Acceptance gate: one pass/fail line per criterion, exit status equals
// the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "refl/census.hpp"
#include "refl/marked.hpp"

using refl::Factorization;
using refl::GroupContext;
using refl::Integer;
using refl::MarkedFactorization;
using refl::Signature;

namespace {

struct Check {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& why, std::string& detail) {
  if (!cond && detail.empty()) detail = why;
  return cond;
}

// 1. The three groups close to the right orders with the right
// reflection arrangement data.
bool criterion_groups(std::string& detail) {
  struct Facts {
    const char* name;
    size_t order;
    int reflections, classes, hyperplanes, h, rank;
  };
  const Facts table[] = {
      {"g4", 24, 8, 2, 4, 6, 2},
      {"g5", 72, 16, 4, 8, 12, 2},
      {"g25", 648, 24, 2, 12, 12, 3},
  };
  bool ok = true;
  for (const Facts& f : table) {
    const GroupContext& ctx = GroupContext::get(f.name);
    ok &= expect(ctx.group().size() == f.order, std::string(f.name) + " order",
                 detail);
    ok &= expect(ctx.num_reflections() == f.reflections,
                 std::string(f.name) + " reflection count", detail);
    ok &= expect(static_cast<int>(ctx.refl().classes.size()) == f.classes,
                 std::string(f.name) + " class count", detail);
    ok &= expect(ctx.refl().num_hyperplanes == f.hyperplanes,
                 std::string(f.name) + " hyperplane count", detail);
    ok &= expect(ctx.coxeter().h == f.h, std::string(f.name) + " h", detail);
    ok &= expect(ctx.group().rank() == f.rank, std::string(f.name) + " rank",
                 detail);
    for (int r = 0; r < ctx.num_reflections(); ++r)
      ok &= expect(ctx.group().element_order(ctx.refl_elem(r)) == 3,
                   std::string(f.name) + " reflection order", detail);
  }
  return ok;
}

// 2. The orbit of every ordered reflection pair matches the case
// analysis (size and appearing-element description), exhaustively.
bool criterion_pairs(std::string& detail) {
  bool ok = true;
  for (const char* name : {"g4", "g5", "g25"}) {
    const GroupContext& ctx = GroupContext::get(name);
    refl::PairOrbitCheckReport rep = refl::verify_pair_orbits(ctx);
    size_t expected =
        static_cast<size_t>(ctx.num_reflections()) * ctx.num_reflections();
    ok &= expect(rep.pairs_checked == expected,
                 std::string(name) + " pair coverage", detail);
    if (!rep.violations.empty()) {
      ok = expect(false, std::string(name) + ": " + rep.violations.front(),
                  detail);
    }
  }
  return ok;
}

// 3. Shortest factorizations form a single orbit of size n! h^n / |W|:
// 3, 4 and 16 respectively.
bool criterion_shortest(std::string& detail) {
  const std::map<std::string, long long> expected{
      {"g4", 3}, {"g5", 4}, {"g25", 16}};
  bool ok = true;
  for (const auto& [name, size] : expected) {
    const GroupContext& ctx = GroupContext::get(name);
    ok &= expect(refl::bessis_orbit_size(ctx) == Integer(size),
                 name + " formula value", detail);
    auto shortest = refl::enumerate_factorizations(ctx, ctx.default_coxeter(),
                                                   ctx.group().rank());
    ok &= expect(shortest.size() == static_cast<size_t>(size),
                 name + " shortest count", detail);
    refl::OrbitReport rep = refl::orbit(ctx, shortest.front());
    ok &= expect(rep.size == static_cast<size_t>(size), name + " orbit size",
                 detail);
  }
  return ok;
}

// 4. Same-signature transitivity for the rank-two groups: one orbit per
// realized signature at every tested length, with exact totals, for all
// Coxeter elements at the shorter lengths.
bool criterion_transitivity_rank2(std::string& detail) {
  bool ok = true;
  const GroupContext& g4 = GroupContext::get("g4");
  const long long g4_totals[] = {3, 18, 180, 1320, 11088, 86688};
  for (int m = 2; m <= 6; ++m) {
    for (refl::ElemId c : g4.coxeter().coxeter_elements) {
      refl::CensusReport rep = refl::verify_transitivity(g4, c, m);
      ok &= expect(rep.ok(), "g4 census failure m=" + std::to_string(m),
                   detail);
      ok &= expect(rep.total == static_cast<size_t>(g4_totals[m - 2]),
                   "g4 total m=" + std::to_string(m), detail);
      ok &= expect(rep.orbits.size() == static_cast<size_t>((m + 2) / 3),
                   "g4 orbit count m=" + std::to_string(m), detail);
    }
  }
  refl::CensusReport g4m7 =
      refl::verify_transitivity(g4, g4.default_coxeter(), 7);
  ok &= expect(g4m7.ok() && g4m7.total == 86688, "g4 m=7 census", detail);
  ok &= expect(g4m7.orbits.size() == 3, "g4 m=7 orbit count", detail);

  const GroupContext& g5 = GroupContext::get("g5");
  const long long g5_totals[] = {4, 48, 960, 14080, 236544};
  for (int m = 2; m <= 6; ++m) {
    refl::CensusReport rep =
        refl::verify_transitivity(g5, g5.default_coxeter(), m);
    ok &= expect(rep.ok(), "g5 census failure m=" + std::to_string(m), detail);
    ok &= expect(rep.total == static_cast<size_t>(g5_totals[m - 2]),
                 "g5 total m=" + std::to_string(m), detail);
  }
  return ok;
}

// 5. Every orbit longer than the shortest length contains a member with
// an adjacent equal pair, and the length-five signature census for the
// order-72 group behaves as catalogued.
bool criterion_pair_existence(std::string& detail) {
  bool ok = true;
  const GroupContext& g4 = GroupContext::get("g4");
  for (int m = 3; m <= 6; ++m) {
    refl::CensusReport rep =
        refl::verify_transitivity(g4, g4.default_coxeter(), m);
    for (const refl::OrbitSummary& o : rep.orbits)
      ok &= expect(o.has_square_pair,
                   "g4 m=" + std::to_string(m) + " orbit " +
                       o.signature.to_string() + " lacks an equal pair",
                   detail);
  }
  const GroupContext& g5 = GroupContext::get("g5");
  for (int m = 5; m <= 6; ++m) {
    refl::CensusReport rep =
        refl::verify_transitivity(g5, g5.default_coxeter(), m);
    for (const refl::OrbitSummary& o : rep.orbits)
      ok &= expect(o.has_square_pair,
                   "g5 m=" + std::to_string(m) + " orbit " +
                       o.signature.to_string() + " lacks an equal pair",
                   detail);
  }
  for (int m : {3, 4}) {
    refl::CensusReport rep =
        refl::verify_transitivity(g5, g5.default_coxeter(), m);
    ok &= expect(rep.ok(), "g5 short census m=" + std::to_string(m), detail);
  }
  refl::G5LengthFiveReport five =
      refl::g5_signature_census(g5, g5.default_coxeter());
  ok &= expect(five.ok() && five.total == 14080, "g5 length-5 census", detail);
  return ok;
}

// 6. The three counting methods agree: direct enumeration, the
// exponential-generating-function coefficient, and the closed form for
// the order-24 group; and every factorization obeys the determinant
// congruence.
bool criterion_counting(std::string& detail) {
  bool ok = true;
  const GroupContext& g4 = GroupContext::get("g4");
  for (int m = 0; m <= 30; ++m)
    ok &= expect(refl::g4_closed_form(m) == refl::count_via_egf(g4, m),
                 "closed form mismatch at m=" + std::to_string(m), detail);
  struct Row {
    const char* group;
    int m;
  };
  for (const Row& row : {Row{"g4", 2}, Row{"g4", 3}, Row{"g4", 4},
                         Row{"g5", 2}, Row{"g5", 3}, Row{"g5", 4},
                         Row{"g25", 3}, Row{"g25", 4}}) {
    const GroupContext& ctx = GroupContext::get(row.group);
    auto all =
        refl::enumerate_factorizations(ctx, ctx.default_coxeter(), row.m);
    ok &= expect(Integer(all.size()) == refl::count_via_egf(ctx, row.m),
                 std::string(row.group) + " m=" + std::to_string(row.m) +
                     " enumeration vs EGF",
                 detail);
    int target_value = refl::det_value(ctx, ctx.default_coxeter());
    for (const Factorization& f : all) {
      int sum = 0;
      for (int p : f.parts)
        sum += ctx.refl().class_value[ctx.refl_class(p)];
      ok &= expect(sum % 3 == target_value,
                   "determinant congruence violated", detail);
      if (!ok) break;
    }
  }
  return ok;
}

// 7. The reduction machinery: canonical descent traces replay, pair
// collapse and expansion invert each other, marked moves project to
// plain moves, the cubed move transfers the mark, and the certificate
// orbit test agrees with breadth-first search.
bool criterion_reduction(std::string& detail) {
  bool ok = true;
  size_t sampled = 0;
  struct Row {
    const char* group;
    int m;
  };
  for (const Row& row : {Row{"g4", 3}, Row{"g4", 4}, Row{"g4", 5},
                         Row{"g4", 6}, Row{"g5", 5}, Row{"g5", 6}}) {
    const GroupContext& ctx = GroupContext::get(row.group);
    auto all =
        refl::enumerate_factorizations(ctx, ctx.default_coxeter(), row.m);
    size_t stride = std::max<size_t>(1, all.size() / 250);
    for (size_t i = 0; i < all.size(); i += stride) {
      refl::ReduceTrace tr = refl::canonical_reduce(ctx, all[i]);
      ok &= expect(static_cast<int>(tr.base.length()) ==
                       refl::base_length(ctx),
                   "descent stopped early", detail);
      ok &= expect(refl::replay(ctx, tr), "trace replay failed", detail);
      ++sampled;
      if (!ok) return ok;
    }
  }
  ok &= expect(sampled >= 1000,
               "only sampled " + std::to_string(sampled) + " traces", detail);

  // Collapse/expand inversion wherever an adjacent equal pair exists.
  const GroupContext& g4 = GroupContext::get("g4");
  for (const Factorization& f :
       refl::enumerate_factorizations(g4, g4.default_coxeter(), 4)) {
    for (int i = 0; i + 1 < 4; ++i) {
      if (f.parts[i] != f.parts[i + 1]) continue;
      refl::EncodedFactorization e = refl::reduce_pair(g4, f, i);
      ok &= expect(refl::expand(g4, e, i) == f, "collapse/expand round trip",
                   detail);
    }
  }

  // Marked moves, exhaustively at length three.
  refl::BraidWord cube = refl::braid_parse("s1 s1 s1");
  for (const Factorization& f :
       refl::enumerate_factorizations(g4, g4.default_coxeter(), 3)) {
    for (int mark = 0; mark < 3; ++mark) {
      MarkedFactorization m{f, mark};
      for (int i = 0; i < 2; ++i) {
        ok &= expect(refl::marked_move(g4, m, i).underlying ==
                         refl::hurwitz_move(g4, f, i),
                     "marked move does not project", detail);
        ok &= expect(refl::inverse_marked_move(g4, refl::marked_move(g4, m, i),
                                               i) == m,
                     "marked move not inverted", detail);
      }
    }
    int a = f.parts[0], b = f.parts[1];
    if (a != b && g4.refl_class(a) == g4.refl_class(b) && !g4.commutes(a, b)) {
      MarkedFactorization m{f, 0};
      MarkedFactorization cubed = refl::apply_marked_braid(g4, m, cube);
      ok &= expect(cubed.underlying == f && cubed.mark == 1,
                   "cubed move does not transfer the mark", detail);
    }
  }

  // Certificate test vs breadth-first search on sampled pairs with equal
  // signatures (the non-trivial case).
  std::mt19937 rng(2026);
  for (const char* name : {"g4", "g5"}) {
    const GroupContext& ctx = GroupContext::get(name);
    auto all = refl::enumerate_factorizations(ctx, ctx.default_coxeter(), 4);
    std::map<std::string, std::vector<const Factorization*>> by_sig;
    for (const Factorization& f : all)
      by_sig[refl::signature(ctx, f).to_string()].push_back(&f);
    int trials = 0;
    for (const auto& [sig, fs] : by_sig) {
      std::uniform_int_distribution<size_t> pick(0, fs.size() - 1);
      for (int t = 0; t < 100 && trials < 200; ++t, ++trials) {
        const Factorization& x = *fs[pick(rng)];
        const Factorization& y = *fs[pick(rng)];
        refl::SameOrbitResult bfs =
            refl::same_orbit(ctx, x, y, refl::OrbitMode::bfs);
        refl::SameOrbitResult cert =
            refl::same_orbit(ctx, x, y, refl::OrbitMode::certificate);
        ok &= expect(bfs.same == cert.same, "orbit test modes disagree",
                     detail);
        if (bfs.same)
          ok &= expect(refl::apply_braid(ctx, x, bfs.word) == y,
                       "orbit certificate word does not replay", detail);
      }
    }
    ok &= expect(trials >= 100, "too few orbit-mode trials", detail);
  }
  return ok;
}

// 8. The rank-three program: censuses at lengths four through six pass,
// and mark transfer works on padded long factorizations.
bool criterion_rank3(std::string& detail) {
  bool ok = true;
  const GroupContext& ctx = GroupContext::get("g25");
  const long long totals[] = {384, 11520, 276480};
  for (int m = 4; m <= 6; ++m) {
    refl::CensusReport rep =
        refl::g25_program(ctx, ctx.default_coxeter(), m);
    ok &= expect(rep.ok(), "rank-three census failed m=" + std::to_string(m),
                 detail);
    ok &= expect(rep.total == static_cast<size_t>(totals[m - 4]),
                 "rank-three total m=" + std::to_string(m), detail);
  }

  // Pad length-four factorizations with s,s,s (the cube of a reflection
  // is the identity) to reach length seven, then move the mark around.
  auto base = refl::enumerate_factorizations(ctx, ctx.default_coxeter(), 4);
  std::mt19937 rng(31337);
  std::uniform_int_distribution<size_t> pick(0, base.size() - 1);
  std::uniform_int_distribution<int> pick_refl(0, ctx.num_reflections() - 1);
  int transfers = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Factorization f = base[pick(rng)];
    int s = pick_refl(rng);
    f.parts.insert(f.parts.end(), {s, s, s});
    if (refl::product_of(ctx, f.parts) != f.target) {
      ok = expect(false, "padding changed the product", detail);
      break;
    }
    for (int from = 0; from < 7; ++from)
      for (int to = 0; to < 7; ++to) {
        if (ctx.refl_class(f.parts[from]) != ctx.refl_class(f.parts[to]))
          continue;
        auto [result, word] =
            refl::transfer_mark(ctx, MarkedFactorization{f, from}, to);
        ok &= expect(result.underlying == f && result.mark == to,
                     "mark transfer changed the factorization", detail);
        ok &= expect(refl::apply_marked_braid(ctx, MarkedFactorization{f, from},
                                              word) == result,
                     "mark transfer word does not replay", detail);
        ++transfers;
        if (!ok) return ok;
      }
  }
  ok &= expect(transfers >= 200, "too few long mark transfers", detail);
  return ok;
}

// 9. Orbit-size ratio reports for the order-24 group are produced for
// every length up to seven and are internally consistent.
bool criterion_ratios(std::string& detail) {
  bool ok = true;
  const GroupContext& ctx = GroupContext::get("g4");
  for (int m = 2; m <= 7; ++m) {
    refl::RatioReport rep = refl::ratio_report(ctx, ctx.default_coxeter(), m);
    ok &= expect(rep.consistent, "ratio report inconsistent at m=" +
                                     std::to_string(m),
                 detail);
    ok &= expect(rep.orbits.size() == static_cast<size_t>((m + 2) / 3),
                 "ratio report orbit count m=" + std::to_string(m), detail);
    size_t expected_lines = rep.orbits.size() * (rep.orbits.size() - 1) / 2;
    ok &= expect(rep.lines.size() == expected_lines,
                 "ratio line count m=" + std::to_string(m), detail);
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"group construction and reflection arrangements", criterion_groups},
      {"reflection-pair orbit case analysis", criterion_pairs},
      {"shortest-factorization orbit sizes", criterion_shortest},
      {"same-signature transitivity, rank two", criterion_transitivity_rank2},
      {"equal-pair existence and length-five census", criterion_pair_existence},
      {"counting: enumeration, generating function, closed form",
       criterion_counting},
      {"reduction traces, marked moves, orbit certificates",
       criterion_reduction},
      {"rank-three program and long mark transfers", criterion_rank3},
      {"orbit-size ratio reports", criterion_ratios},
  };
  int failures = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    std::string detail;
    bool pass = false;
    auto start = std::chrono::steady_clock::now();
    try {
      pass = checks[i].run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("%s criterion %zu: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                i + 1, checks[i].name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
