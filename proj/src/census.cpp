#include "refl/census.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace refl {

namespace {

uint64_t pack_parts(const std::vector<int>& parts) {
  uint64_t key = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    key |= static_cast<uint64_t>(parts[i]) << (5 * i);
  return key;
}

Integer ipow(Integer base, int exp) {
  Integer r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Integer binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || a % b != 0)
    throw std::domain_error(std::string("non-integer result in ") + what);
  return a / b;
}

}  // namespace

ReachabilityTable reachability(const GroupContext& ctx, int max_length) {
  if (max_length < 0) throw std::invalid_argument("negative length bound");
  size_t n = ctx.group().size();
  ReachabilityTable t;
  t.reachable.assign(static_cast<size_t>(max_length) + 1,
                     std::vector<char>(n, 0));
  t.reachable[0][0] = 1;
  for (int k = 1; k <= max_length; ++k)
    for (size_t e = 0; e < n; ++e) {
      if (!t.reachable[k - 1][e]) continue;
      for (int r = 0; r < ctx.num_reflections(); ++r)
        t.reachable[k][ctx.group().mul(static_cast<ElemId>(e),
                                       ctx.refl_elem(r))] = 1;
    }
  return t;
}

std::vector<Factorization> enumerate_factorizations(const GroupContext& ctx,
                                                    ElemId c, int m) {
  if (m < 1) throw std::invalid_argument("length must be at least 1");
  ReachabilityTable reach = reachability(ctx, m);
  std::vector<Factorization> out;
  std::vector<int> parts;
  parts.reserve(m);
  // need = (p_1 ... p_j)^-1 c, the product the suffix still has to supply.
  std::function<void(ElemId, int)> dfs = [&](ElemId need, int depth) {
    if (depth == m) {
      if (need == 0) out.push_back({c, parts});
      return;
    }
    for (int r = 0; r < ctx.num_reflections(); ++r) {
      ElemId next =
          ctx.group().mul(ctx.group().inv(ctx.refl_elem(r)), need);
      if (!reach.at(m - depth - 1, next)) continue;
      parts.push_back(r);
      dfs(next, depth + 1);
      parts.pop_back();
    }
  };
  dfs(c, 0);
  return out;
}

Integer count_via_egf(const GroupContext& ctx, int m) {
  if (m < 0) throw std::invalid_argument("negative length");
  long n = ctx.group().rank();
  long R = ctx.num_reflections();
  long A = ctx.refl().num_hyperplanes;
  if (R % n != 0 || A % n != 0)
    throw std::domain_error("reflection/hyperplane counts not divisible by rank");
  Integer sum = 0;
  for (long k = 0; k <= n; ++k) {
    Integer base = k * (R / n) - (n - k) * (A / n);
    Integer term = binom(n, k) * ipow(base, m);
    if ((n - k) % 2 == 1) term = -term;
    sum += term;
  }
  return exact_div(sum, Integer(ctx.group().size()), "EGF coefficient");
}

Integer g4_closed_form(int m) {
  Integer v = ipow(8, m) - ipow(2, m + 1) + ipow(-4, m);
  return exact_div(v, 24, "closed-form coefficient");
}

Integer bessis_orbit_size(const GroupContext& ctx) {
  long n = ctx.group().rank();
  Integer fact = 1;
  for (long i = 2; i <= n; ++i) fact *= i;
  Integer v = fact * ipow(ctx.coxeter().h, static_cast<int>(n));
  return exact_div(v, Integer(ctx.group().size()), "shortest-orbit size");
}

int det_value(const GroupContext& ctx, ElemId e) {
  Cyclotomic d = ctx.group().matrix(e).det();
  Cyclotomic w = Cyclotomic::one();
  for (int k = 0; k < 3; ++k) {
    if (d == w) return k;
    w = w * Cyclotomic::omega();
  }
  throw StructureViolation("determinant is not a power of omega");
}

std::vector<Signature> valid_signatures(const GroupContext& ctx, ElemId c,
                                        int m) {
  int num_classes = static_cast<int>(ctx.refl().classes.size());
  int target = det_value(ctx, c);
  std::vector<Signature> out;
  std::vector<int> counts(num_classes, 0);
  std::function<void(int, int)> rec = [&](int cls, int left) {
    if (cls == num_classes - 1) {
      counts[cls] = left;
      int v = 0;
      for (int i = 0; i < num_classes; ++i)
        v += counts[i] * ctx.refl().class_value[i];
      if (v % 3 == target) out.push_back({counts});
      return;
    }
    for (int take = 0; take <= left; ++take) {
      counts[cls] = take;
      rec(cls + 1, left - take);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end());
  return out;
}

CensusReport verify_transitivity(const GroupContext& ctx, ElemId c, int m,
                                 size_t cap) {
  auto t0 = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.group = ctx.name();
  rep.coxeter = c;
  rep.m = m;
  if (!ctx.is_coxeter(c))
    throw std::invalid_argument("census target is not a Coxeter element");

  std::vector<Factorization> all = enumerate_factorizations(ctx, c, m);
  rep.total = all.size();

  Integer predicted = count_via_egf(ctx, m);
  if (Integer(rep.total) != predicted) {
    std::ostringstream os;
    os << "enumerated total " << rep.total
       << " != EGF coefficient " << predicted;
    rep.failures.push_back(os.str());
  }

  int cval = det_value(ctx, c);
  std::unordered_set<uint64_t> visited;
  visited.reserve(all.size() * 2);
  size_t covered = 0;
  std::map<Signature, size_t> sig_to_orbit;
  for (const Factorization& f : all) {
    // Per-factorization determinant congruence.
    int v = 0;
    for (int r : f.parts) v += ctx.refl().class_value[ctx.refl_class(r)];
    if (v % 3 != cval) {
      rep.failures.push_back("determinant congruence fails for " +
                             factorization_to_string(ctx, f));
      break;
    }
    if (visited.count(pack_parts(f.parts))) continue;

    OrbitReport ob = orbit(ctx, f, cap);
    if (ob.truncated) throw CapExceeded("orbit cap exceeded in census");
    OrbitSummary os;
    os.signature = ob.signature;
    os.size = ob.size;
    os.representative = f;
    for (const Factorization& g : ob.members) {
      visited.insert(pack_parts(g.parts));
      if (!(signature(ctx, g) == ob.signature))
        rep.failures.push_back("signature varies inside an orbit of " +
                               factorization_to_string(ctx, f));
      if (!os.has_square_pair && first_square_pair_position(g) >= 0)
        os.has_square_pair = true;
    }
    covered += ob.size;
    auto [it, fresh] = sig_to_orbit.emplace(os.signature, rep.orbits.size());
    if (!fresh)
      rep.failures.push_back("two orbits share signature " +
                             os.signature.to_string());
    rep.orbits.push_back(std::move(os));
  }
  if (covered != rep.total)
    rep.failures.push_back("orbit sizes do not sum to the enumerated total");

  for (const auto& [sig, idx] : sig_to_orbit) rep.realized.push_back(sig);
  rep.valid = valid_signatures(ctx, c, m);
  if (ctx.name() == "g4") {
    if (rep.realized != rep.valid)
      rep.failures.push_back(
          "realized signatures differ from the congruence census");
  } else {
    if (!std::includes(rep.valid.begin(), rep.valid.end(),
                       rep.realized.begin(), rep.realized.end()))
      rep.failures.push_back(
          "realized signature violates the congruence rule");
  }

  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

RatioReport ratio_report(const GroupContext& ctx, ElemId c, int m) {
  CensusReport census = verify_transitivity(ctx, c, m);
  RatioReport rep;
  rep.m = m;
  rep.total = census.total;
  rep.orbits = census.orbits;
  size_t covered = 0;
  for (const OrbitSummary& o : rep.orbits) covered += o.size;
  rep.consistent = covered == rep.total && census.ok();

  for (size_t i = 0; i < rep.orbits.size(); ++i)
    for (size_t j = i + 1; j < rep.orbits.size(); ++j) {
      const OrbitSummary& x = rep.orbits[i];
      const OrbitSummary& y = rep.orbits[j];
      long a1 = x.signature.counts[0], b1 = x.signature.total() - a1;
      long a2 = y.signature.counts[0], b2 = y.signature.total() - a2;
      RatioLine line;
      line.sig1 = x.signature;
      line.sig2 = y.signature;
      line.size1 = x.size;
      line.size2 = y.size;
      // Literal reading binom(a, a+b) is zero whenever b > 0.
      Integer lit1 = binom(a1, a1 + b1), lit2 = binom(a2, a2 + b2);
      Integer tr1 = binom(a1 + b1, a1), tr2 = binom(a2 + b2, a2);
      if (lit1 == 0 && lit2 == 0)
        line.note = "literal reading undefined (0/0)";
      else
        line.literal_match =
            Integer(x.size) * lit2 == Integer(y.size) * lit1;
      line.transposed_match =
          Integer(x.size) * tr2 == Integer(y.size) * tr1;
      rep.lines.push_back(std::move(line));
    }
  return rep;
}

G5LengthFiveReport g5_signature_census(const GroupContext& ctx, ElemId c) {
  if (ctx.name() != "g5")
    throw std::invalid_argument("length-five census applies to g5 only");
  G5LengthFiveReport rep;
  std::set<Signature> sigs;
  std::vector<Factorization> all = enumerate_factorizations(ctx, c, 5);
  rep.total = all.size();
  for (const Factorization& f : all) sigs.insert(signature(ctx, f));
  rep.realized.assign(sigs.begin(), sigs.end());

  rep.excluded_pattern_absent = true;
  rep.categories_cover = true;
  rep.det_congruence_holds = true;
  int cval = det_value(ctx, c);
  for (const Signature& s : rep.realized) {
    std::vector<int> sorted = s.counts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<int>{1, 1, 1, 2})
      rep.excluded_pattern_absent = false;
    int mx = *std::max_element(s.counts.begin(), s.counts.end());
    int pairs = static_cast<int>(
        std::count_if(s.counts.begin(), s.counts.end(),
                      [](int v) { return v >= 2; }));
    // Categories: >= 4 of one class; >= 3 of one class plus two others;
    // >= 2 from each of a pair of classes plus one from a third.
    bool covered = mx >= 4 || (mx >= 3 && s.total() - mx >= 2) ||
                   (pairs >= 2 && s.total() >= 5);
    if (!covered) rep.categories_cover = false;
    int v = 0;
    for (size_t i = 0; i < s.counts.size(); ++i)
      v += s.counts[i] * ctx.refl().class_value[i];
    if (v % 3 != cval) rep.det_congruence_holds = false;
  }
  return rep;
}

CensusReport g25_program(const GroupContext& ctx, ElemId c, int m,
                         size_t cap) {
  if (ctx.name() != "g25")
    throw std::invalid_argument("program applies to g25 only");
  if (m > 6)
    throw std::invalid_argument("length above the verified range");
  CensusReport rep = verify_transitivity(ctx, c, m, cap);
  PairOrbitCheckReport pairs = verify_pair_orbits(ctx);
  for (const std::string& v : pairs.violations)
    rep.failures.push_back("pair orbit: " + v);
  return rep;
}

}  // namespace refl
