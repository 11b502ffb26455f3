#pragma once

#include "refl/hurwitz.hpp"

namespace refl {

struct MarkTransferStuck : std::runtime_error {
  explicit MarkTransferStuck(const std::string& what)
      : std::runtime_error("mark transfer stuck: " + what) {}
};

struct ReductionStuck : std::runtime_error {
  explicit ReductionStuck(const std::string& what)
      : std::runtime_error("reduction stuck: " + what) {}
};

/// A factorization with one starred position.  Marked moves act like
/// Hurwitz moves on the underlying factorization while the mark follows
/// its element: a move at i sends mark i -> i+1 and i+1 -> i.
struct MarkedFactorization {
  Factorization underlying;
  int mark = 0;
  bool operator==(const MarkedFactorization&) const = default;
};

MarkedFactorization marked_move(const GroupContext& ctx,
                                const MarkedFactorization& f, int i);
MarkedFactorization inverse_marked_move(const GroupContext& ctx,
                                        const MarkedFactorization& f, int i);
MarkedFactorization apply_marked_braid(const GroupContext& ctx,
                                       const MarkedFactorization& f,
                                       const BraidWord& w);

/// Moves the mark to target_position without changing the underlying
/// factorization.  Requires the element there to share the marked
/// element's class.  Uses cubed-move swaps for non-commuting neighbors
/// and window detours for commuting (same-triple) barriers.
std::pair<MarkedFactorization, BraidWord> transfer_mark(
    const GroupContext& ctx, const MarkedFactorization& f,
    int target_position);

/// A factorization with an adjacent equal pair (s, s) collapsed to the
/// single reflection s^2, remembering the class of s^2.
struct EncodedFactorization {
  Factorization reduced;
  int class_label = 0;
  bool operator==(const EncodedFactorization&) const = default;
};

EncodedFactorization reduce_pair(const GroupContext& ctx,
                                 const Factorization& f, int i);
Factorization expand(const GroupContext& ctx, const EncodedFactorization& e,
                     int position);

/// One level of descent: braid word from the previous level to a member
/// with an adjacent equal pair, the pair position, and the class label
/// recorded by the reduction.
struct ReduceStep {
  BraidWord word;
  Factorization before;  // after applying word, contains the pair
  int position = 0;
  int class_label = 0;
  Factorization after;  // one shorter
};

struct ReduceTrace {
  Factorization input;
  Factorization base;
  std::vector<ReduceStep> steps;
};

/// Shortest factorization length the descent stops at.
int base_length(const GroupContext& ctx);

/// Repeated square-pair discovery + reduction down to base length.  The
/// class reduced at each level is the smallest class label for which the
/// orbit contains an adjacent equal pair, which makes the label sequence
/// an orbit invariant.
ReduceTrace canonical_reduce(const GroupContext& ctx, const Factorization& f);

/// Re-runs every step of a trace from its input; true when each braid
/// word and reduction reproduces the recorded factorizations.
bool replay(const GroupContext& ctx, const ReduceTrace& trace);

enum class OrbitMode { bfs, certificate };

struct SameOrbitResult {
  bool same = false;
  std::string evidence;
  BraidWord word;  // bfs mode: braid word from f1 to f2 when same
};

SameOrbitResult same_orbit(const GroupContext& ctx, const Factorization& f1,
                           const Factorization& f2, OrbitMode mode);

}  // namespace refl
