#pragma once

#include "refl/hurwitz.hpp"

namespace refl {

/// Level sets of the length function: reachable[k] marks the elements
/// expressible as a product of exactly k reflections.
struct ReachabilityTable {
  std::vector<std::vector<char>> reachable;
  bool at(int k, ElemId e) const {
    return reachable[static_cast<size_t>(k)][e] != 0;
  }
  int max_length() const { return static_cast<int>(reachable.size()) - 1; }
};

ReachabilityTable reachability(const GroupContext& ctx, int max_length);

/// All length-m reflection factorizations of c, in ascending lexicographic
/// part order, via DFS with exact suffix-reachability pruning.
std::vector<Factorization> enumerate_factorizations(const GroupContext& ctx,
                                                    ElemId c, int m);

/// Exact coefficient of the factorization-counting exponential generating
/// function (1/|W|)(e^{q|R|/n} - e^{-q|A|/n})^n.
Integer count_via_egf(const GroupContext& ctx, int m);

/// The specialization (8^m - 2^{m+1} + (-4)^m)/24 for the group of order 24.
Integer g4_closed_form(int m);

/// Orbit size of a shortest factorization: n! h^n / |W|.
Integer bessis_orbit_size(const GroupContext& ctx);

/// Determinant exponent (power of omega) of an element's determinant.
int det_value(const GroupContext& ctx, ElemId e);

/// All class-count vectors of total m whose value sum is congruent mod 3
/// to the value of c.  Exactly the realizable signatures for the order-24
/// group; a necessary condition (superset) for the others.
std::vector<Signature> valid_signatures(const GroupContext& ctx, ElemId c,
                                        int m);

struct OrbitSummary {
  Signature signature;
  size_t size = 0;
  Factorization representative;
  bool has_square_pair = false;  // some member has adjacent equal parts
};

struct CensusReport {
  std::string group;
  ElemId coxeter = 0;
  int m = 0;
  size_t total = 0;
  std::vector<OrbitSummary> orbits;
  std::vector<Signature> realized;
  std::vector<Signature> valid;
  std::vector<std::string> failures;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

/// Full orbit/signature census: enumerates, partitions into orbits, and
/// checks (a) constant signature per orbit, (b) distinct signatures
/// across orbits, (c) realized signatures against the congruence rule
/// (equality for the order-24 group, inclusion otherwise), (d) the EGF
/// total, and (e) the per-factorization determinant congruence.
CensusReport verify_transitivity(const GroupContext& ctx, ElemId c, int m,
                                 size_t cap = size_t(1) << 22);

struct RatioLine {
  Signature sig1, sig2;
  size_t size1 = 0, size2 = 0;
  bool literal_match = false;     // binom(a, a+b) reading
  bool transposed_match = false;  // binom(a+b, a) reading
  std::string note;
};

struct RatioReport {
  int m = 0;
  size_t total = 0;
  std::vector<OrbitSummary> orbits;
  std::vector<RatioLine> lines;
  bool consistent = false;  // orbit sizes sum to the total
};

/// Measured orbit-size ratios against both readings of the binomial
/// prediction; reporting only, neither reading is asserted to hold.
RatioReport ratio_report(const GroupContext& ctx, ElemId c, int m);

struct G5LengthFiveReport {
  size_t total = 0;
  std::vector<Signature> realized;
  bool excluded_pattern_absent = false;  // no {x^2, y, z, w} signature
  bool categories_cover = false;
  bool det_congruence_holds = false;
  bool ok() const {
    return excluded_pattern_absent && categories_cover && det_congruence_holds;
  }
};

G5LengthFiveReport g5_signature_census(const GroupContext& ctx, ElemId c);

/// Transitivity census plus the exhaustive pair-orbit verification for
/// the rank-three group.
CensusReport g25_program(const GroupContext& ctx, ElemId c, int m,
                         size_t cap = size_t(1) << 22);

}  // namespace refl
