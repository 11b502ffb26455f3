#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "refl/structure.hpp"

namespace refl {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// One braid generator: sigma_{index+1} or its inverse.  Positions are
/// 0-based in code; the text form "s1 s2' s1" is 1-based with a trailing
/// apostrophe marking inverses.
struct BraidGen {
  int index = 0;
  bool inverse = false;
  bool operator==(const BraidGen&) const = default;
};
using BraidWord = std::vector<BraidGen>;

std::string braid_to_string(const BraidWord& w);
BraidWord braid_parse(const std::string& text);
BraidWord braid_inverse(const BraidWord& w);

/// A reflection factorization of a group element.  Parts are reflection
/// indices (0..|R|-1); the left-to-right product always equals target.
struct Factorization {
  ElemId target = 0;
  std::vector<int> parts;

  size_t length() const { return parts.size(); }
  bool operator==(const Factorization&) const = default;
  bool operator<(const Factorization& o) const {
    return parts < o.parts;  // targets compared equal in context
  }
};

/// Multiset of reflection-class labels as per-class counts.
struct Signature {
  std::vector<int> counts;
  bool operator==(const Signature&) const = default;
  bool operator<(const Signature& o) const { return counts < o.counts; }
  std::string to_string() const;  // e.g. "{1^3,2^1}"
  int total() const;
};

Factorization make_factorization(const GroupContext& ctx, ElemId target,
                                 const std::vector<ElemId>& part_elems);
/// Parses "A,B2AB,A" against the group's name table; target is the product.
Factorization parse_factorization(const GroupContext& ctx,
                                  const std::string& text);
std::string factorization_to_string(const GroupContext& ctx,
                                    const Factorization& f);
ElemId product_of(const GroupContext& ctx, const std::vector<int>& parts);

Signature signature(const GroupContext& ctx, const Factorization& f);

/// sigma_i: (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1}); 0-based i.
Factorization hurwitz_move(const GroupContext& ctx, const Factorization& f,
                           int i);
Factorization inverse_hurwitz_move(const GroupContext& ctx,
                                   const Factorization& f, int i);
Factorization apply_braid(const GroupContext& ctx, const Factorization& f,
                          const BraidWord& w);

struct OrbitReport {
  Factorization representative;
  size_t size = 0;
  bool truncated = false;  // cap hit; size is then a lower bound
  std::vector<Factorization> members;  // sorted; empty when truncated
  Signature signature;
  std::vector<std::set<int>> appearing;  // per position, reflection indices
};

OrbitReport orbit(const GroupContext& ctx, const Factorization& f,
                  size_t cap = size_t(1) << 20);

/// Membership search that also yields a braid word from `from` to the
/// first member satisfying `goal`.
struct OrbitSearchResult {
  bool found = false;
  bool exhausted = false;  // orbit fully enumerated without a hit
  Factorization member;
  BraidWord word;
};
OrbitSearchResult orbit_search(const GroupContext& ctx, const Factorization& f,
                               const std::function<bool(const Factorization&)>& goal,
                               size_t budget);

/// Class sorting: a braid word rearranging f so its class sequence
/// equals `pattern` (a permutation of f's signature, as 0-based class
/// indices).
std::pair<Factorization, BraidWord> sort_to_pattern(
    const GroupContext& ctx, const Factorization& f,
    const std::vector<int>& pattern);

/// Case analysis of an ordered reflection pair and its full orbit data.
struct PairProfile {
  std::string tag;      // equal | inverse | commuting-set | same-class |
                        // cross-class | square | adjacent | non-adjacent |
                        // inverse-triple
  size_t expected_size = 0;
  size_t size = 0;
  std::vector<std::set<int>> appearing_by_class;
  bool conforms = false;
  std::string detail;   // first violated condition, if any
};
PairProfile pair_orbit_profile(const GroupContext& ctx, int t1, int t2);

struct PairOrbitCheckReport {
  size_t pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
PairOrbitCheckReport verify_pair_orbits(const GroupContext& ctx);

/// Searches f's orbit for a member with adjacent equal parts.
struct SquarePairResult {
  enum class Status { found, orbit_exhausted, budget_exhausted } status;
  Factorization member;
  BraidWord word;
  int position = -1;  // index i with parts[i] == parts[i+1]
};
SquarePairResult find_square_pair(const GroupContext& ctx,
                                  const Factorization& f, size_t budget);
/// Same search restricted to pairs whose class is `cls`.
SquarePairResult find_square_pair_of_class(const GroupContext& ctx,
                                           const Factorization& f, int cls,
                                           size_t budget);

int first_square_pair_position(const Factorization& f);

}  // namespace refl
