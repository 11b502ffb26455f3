#include "refl/marked.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace refl {

namespace {

void append(BraidWord& a, const BraidWord& b) {
  a.insert(a.end(), b.begin(), b.end());
}

}  // namespace

MarkedFactorization marked_move(const GroupContext& ctx,
                                const MarkedFactorization& f, int i) {
  MarkedFactorization g;
  g.underlying = hurwitz_move(ctx, f.underlying, i);
  g.mark = f.mark == i ? i + 1 : (f.mark == i + 1 ? i : f.mark);
  return g;
}

MarkedFactorization inverse_marked_move(const GroupContext& ctx,
                                        const MarkedFactorization& f, int i) {
  MarkedFactorization g;
  g.underlying = inverse_hurwitz_move(ctx, f.underlying, i);
  g.mark = f.mark == i ? i + 1 : (f.mark == i + 1 ? i : f.mark);
  return g;
}

MarkedFactorization apply_marked_braid(const GroupContext& ctx,
                                       const MarkedFactorization& f,
                                       const BraidWord& w) {
  MarkedFactorization g = f;
  for (const BraidGen& m : w)
    g = m.inverse ? inverse_marked_move(ctx, g, m.index)
                  : marked_move(ctx, g, m.index);
  return g;
}

namespace {

// BFS over marked moves confined to positions [lo, lo+len), looking for a
// state whose window parts equal the starting ones with the mark moved to
// goal_mark.  Returns the braid word, or nullopt when unreachable.
std::optional<BraidWord> window_mark_search(const GroupContext& ctx,
                                            const MarkedFactorization& start,
                                            int lo, int len, int goal_mark,
                                            size_t cap) {
  auto key_of = [&](const MarkedFactorization& m) {
    uint32_t k = 0;
    for (int j = 0; j < len; ++j)
      k |= static_cast<uint32_t>(m.underlying.parts[lo + j]) << (5 * j);
    k |= static_cast<uint32_t>(m.mark - lo) << (5 * len);
    return k;
  };
  uint32_t root = key_of(start);
  MarkedFactorization goal_state = start;
  goal_state.mark = goal_mark;
  uint32_t goal = key_of(goal_state);
  if (root == goal) return BraidWord{};

  std::unordered_map<uint32_t, std::pair<uint32_t, BraidGen>> parent;
  parent.emplace(root, std::make_pair(root, BraidGen{}));
  std::vector<std::pair<uint32_t, MarkedFactorization>> queue{{root, start}};
  for (size_t head = 0; head < queue.size(); ++head) {
    const MarkedFactorization cur = queue[head].second;
    for (int j = lo; j + 1 < lo + len; ++j) {
      for (bool inv : {false, true}) {
        MarkedFactorization next = inv ? inverse_marked_move(ctx, cur, j)
                                       : marked_move(ctx, cur, j);
        uint32_t key = key_of(next);
        if (!parent
                 .emplace(key, std::make_pair(queue[head].first,
                                              BraidGen{j, inv}))
                 .second)
          continue;
        if (key == goal) {
          BraidWord w;
          while (key != root) {
            auto& [prev, mv] = parent.at(key);
            w.push_back(mv);
            key = prev;
          }
          std::reverse(w.begin(), w.end());
          return w;
        }
        if (parent.size() >= cap) return std::nullopt;
        queue.emplace_back(key, std::move(next));
      }
    }
  }
  return std::nullopt;
}

// Swaps the mark between positions i and i+1 while restoring the
// underlying factorization.  Tries the two-position window first (one
// move for an equal pair, a cubed move for a non-commuting pair); when
// the pair commutes, detours through a third element brought next to the
// window, per the triple-aware transfer methods.
void swap_mark_adjacent(const GroupContext& ctx, MarkedFactorization& cur,
                        int i, int goal_mark, BraidWord& total) {
  if (auto w = window_mark_search(ctx, cur, i, 2, goal_mark, 64)) {
    cur = apply_marked_braid(ctx, cur, *w);
    append(total, *w);
    return;
  }
  int n = static_cast<int>(cur.underlying.length());
  for (int r = 0; r < n; ++r) {
    if (r == i || r == i + 1) continue;
    BraidWord chain;
    int lo;
    if (r < i) {
      // Transport the helper rightward to position i-1.
      for (int j = r; j < i - 1; ++j) chain.push_back({j, true});
      lo = i - 1;
    } else {
      // Transport the helper leftward to position i+2.
      for (int j = r - 1; j >= i + 2; --j) chain.push_back({j, false});
      lo = i;
    }
    MarkedFactorization staged = apply_marked_braid(ctx, cur, chain);
    if (auto w = window_mark_search(ctx, staged, lo, 3, goal_mark, 1 << 17)) {
      BraidWord unchain = braid_inverse(chain);
      cur = apply_marked_braid(ctx, staged, *w);
      cur = apply_marked_braid(ctx, cur, unchain);
      append(total, chain);
      append(total, *w);
      append(total, unchain);
      return;
    }
  }
  throw MarkTransferStuck("no usable swap window for commuting pair");
}

}  // namespace

std::pair<MarkedFactorization, BraidWord> transfer_mark(
    const GroupContext& ctx, const MarkedFactorization& f,
    int target_position) {
  int n = static_cast<int>(f.underlying.length());
  if (f.mark < 0 || f.mark >= n || target_position < 0 ||
      target_position >= n)
    throw std::out_of_range("mark position out of range");
  if (target_position == f.mark) return {f, {}};
  int t = f.underlying.parts[f.mark];
  int u = f.underlying.parts[target_position];
  if (ctx.refl_class(t) != ctx.refl_class(u))
    throw std::invalid_argument(
        "mark transfer target is in a different reflection class");

  MarkedFactorization cur = f;
  BraidWord total;
  int p = target_position;
  // Bring the marked element (unchanged) next to the target: leftward
  // steps use forward moves, rightward steps inverse moves.
  int adj = p < cur.mark ? p + 1 : p - 1;
  BraidWord chain;
  while (cur.mark > adj) {
    chain.push_back({cur.mark - 1, false});
    cur = marked_move(ctx, cur, cur.mark - 1);
  }
  while (cur.mark < adj) {
    chain.push_back({cur.mark, true});
    cur = inverse_marked_move(ctx, cur, cur.mark);
  }
  append(total, chain);

  swap_mark_adjacent(ctx, cur, std::min(p, adj), p, total);

  BraidWord unchain = braid_inverse(chain);
  cur = apply_marked_braid(ctx, cur, unchain);
  append(total, unchain);

  if (cur.underlying != f.underlying || cur.mark != p)
    throw MarkTransferStuck("postcondition violated after transfer");
  return {cur, total};
}

EncodedFactorization reduce_pair(const GroupContext& ctx,
                                 const Factorization& f, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(f.length()))
    throw std::out_of_range("reduction position out of range");
  if (f.parts[i] != f.parts[i + 1])
    throw std::invalid_argument("parts are not equal at reduction position");
  int sq = ctx.square_idx(f.parts[i]);
  EncodedFactorization e;
  e.reduced.target = f.target;
  e.reduced.parts = f.parts;
  e.reduced.parts.erase(e.reduced.parts.begin() + i);
  e.reduced.parts[i] = sq;
  e.class_label = ctx.refl_class(sq);
  if (product_of(ctx, e.reduced.parts) != f.target)
    throw std::logic_error("reduction changed the product");
  return e;
}

Factorization expand(const GroupContext& ctx, const EncodedFactorization& e,
                     int position) {
  if (position < 0 || position >= static_cast<int>(e.reduced.length()))
    throw std::out_of_range("expansion position out of range");
  int u = e.reduced.parts[position];
  if (ctx.refl_class(u) != e.class_label)
    throw std::invalid_argument(
        "expansion position class does not match the recorded label");
  int h = ctx.square_idx(u);  // h^2 = u^4 = u, so (h, h) multiplies to u
  Factorization f;
  f.target = e.reduced.target;
  f.parts = e.reduced.parts;
  f.parts[position] = h;
  f.parts.insert(f.parts.begin() + position, h);
  if (product_of(ctx, f.parts) != f.target)
    throw std::logic_error("expansion changed the product");
  return f;
}

int base_length(const GroupContext& ctx) {
  if (ctx.name() == "g4") return 2;
  if (ctx.name() == "g5") return 4;
  if (ctx.name() == "g25") return 3;
  return ctx.group().spec().rank;
}

ReduceTrace canonical_reduce(const GroupContext& ctx, const Factorization& f) {
  ReduceTrace tr;
  tr.input = f;
  Factorization cur = f;
  int base = base_length(ctx);
  int num_classes = static_cast<int>(ctx.refl().classes.size());
  while (static_cast<int>(cur.length()) > base) {
    Signature sig = signature(ctx, cur);
    std::vector<int> pattern;
    for (int c = 0; c < num_classes; ++c)
      pattern.insert(pattern.end(), sig.counts[c], c);
    auto [sorted, w0] = sort_to_pattern(ctx, cur, pattern);

    // The reduced class is the smallest label whose orbit contains an
    // adjacent equal pair; this makes the descent labels orbit invariants.
    std::optional<SquarePairResult> hit;
    for (int c = 0; c < num_classes && !hit; ++c) {
      if (sig.counts[c] < 2) continue;
      SquarePairResult r = find_square_pair_of_class(
          ctx, sorted, c, std::numeric_limits<size_t>::max());
      if (r.status == SquarePairResult::Status::found) hit = std::move(r);
    }
    if (!hit)
      throw ReductionStuck("no adjacent equal pair of any class in orbit");

    ReduceStep step;
    step.word = w0;
    append(step.word, hit->word);
    step.before = hit->member;
    step.position = hit->position;
    EncodedFactorization e = reduce_pair(ctx, hit->member, hit->position);
    step.class_label = e.class_label;
    step.after = e.reduced;
    tr.steps.push_back(step);
    cur = e.reduced;
  }
  tr.base = cur;
  return tr;
}

bool replay(const GroupContext& ctx, const ReduceTrace& trace) {
  Factorization cur = trace.input;
  for (const ReduceStep& step : trace.steps) {
    Factorization moved = apply_braid(ctx, cur, step.word);
    if (!(moved == step.before)) return false;
    if (step.position < 0 ||
        step.position + 1 >= static_cast<int>(moved.length()) ||
        moved.parts[step.position] != moved.parts[step.position + 1])
      return false;
    EncodedFactorization e = reduce_pair(ctx, moved, step.position);
    if (e.class_label != step.class_label || !(e.reduced == step.after))
      return false;
    cur = e.reduced;
  }
  return cur == trace.base;
}

SameOrbitResult same_orbit(const GroupContext& ctx, const Factorization& f1,
                           const Factorization& f2, OrbitMode mode) {
  SameOrbitResult res;
  if (f1.target != f2.target) {
    res.evidence = "different targets";
    return res;
  }
  if (f1.length() != f2.length()) {
    res.evidence = "different lengths";
    return res;
  }
  if (!(signature(ctx, f1) == signature(ctx, f2))) {
    res.evidence = "different signatures";
    return res;
  }
  if (mode == OrbitMode::bfs) {
    OrbitSearchResult r =
        orbit_search(ctx, f1, [&](const Factorization& g) { return g == f2; },
                     std::numeric_limits<size_t>::max());
    res.same = r.found;
    if (r.found) {
      res.word = std::move(r.word);
      res.evidence = "connecting braid word of length " +
                     std::to_string(res.word.size());
    } else {
      res.evidence = "orbit enumerated without reaching second factorization";
    }
    return res;
  }

  ReduceTrace t1 = canonical_reduce(ctx, f1);
  ReduceTrace t2 = canonical_reduce(ctx, f2);
  std::ostringstream ev;
  ev << "descent labels:";
  for (const ReduceStep& s : t1.steps) ev << " " << (s.class_label + 1);
  if (t1.steps.size() != t2.steps.size()) {
    res.evidence = ev.str() + "; descent depths differ";
    return res;
  }
  for (size_t k = 0; k < t1.steps.size(); ++k)
    if (t1.steps[k].class_label != t2.steps[k].class_label) {
      res.evidence =
          ev.str() + "; labels differ at level " + std::to_string(k + 1);
      return res;
    }
  SameOrbitResult base =
      t1.base == t2.base
          ? SameOrbitResult{true, "equal base factorizations", {}}
          : same_orbit(ctx, t1.base, t2.base, OrbitMode::bfs);
  res.same = base.same;
  res.evidence = ev.str() + (base.same ? "; base factorizations share an orbit"
                                       : "; base factorizations in different orbits");
  return res;
}

}  // namespace refl
