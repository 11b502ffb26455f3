#include "refl/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace refl {

namespace {

// Orbit BFS packs a factorization into 5 bits per part, so lengths up to
// 12 with |R| <= 24 fit a single uint64 key.
constexpr size_t kMaxPackedLength = 12;

uint64_t pack(const std::vector<int>& parts) {
  uint64_t key = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    key |= static_cast<uint64_t>(parts[i]) << (5 * i);
  return key;
}

std::vector<int> unpack(uint64_t key, size_t len) {
  std::vector<int> parts(len);
  for (size_t i = 0; i < len; ++i)
    parts[i] = static_cast<int>((key >> (5 * i)) & 31);
  return parts;
}

void check_packable(const Factorization& f) {
  if (f.length() > kMaxPackedLength)
    throw std::invalid_argument("factorization too long for orbit search");
}

}  // namespace

std::string braid_to_string(const BraidWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << "s" << (w[i].index + 1);
    if (w[i].inverse) os << "'";
  }
  return os.str();
}

BraidWord braid_parse(const std::string& text) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad braid generator: " + tok);
    bool inv = tok.back() == '\'';
    std::string num = tok.substr(1, tok.size() - 1 - (inv ? 1 : 0));
    int idx = std::stoi(num) - 1;
    if (idx < 0) throw std::invalid_argument("bad braid generator: " + tok);
    w.push_back({idx, inv});
  }
  return w;
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->index, !it->inverse});
  return out;
}

ElemId product_of(const GroupContext& ctx, const std::vector<int>& parts) {
  ElemId p = 0;
  for (int r : parts) p = ctx.group().mul(p, ctx.refl_elem(r));
  return p;
}

Factorization make_factorization(const GroupContext& ctx, ElemId target,
                                 const std::vector<ElemId>& part_elems) {
  Factorization f;
  f.target = target;
  for (ElemId e : part_elems) {
    int idx = ctx.refl_index(e);
    if (idx < 0)
      throw std::invalid_argument("factorization part '" +
                                  ctx.group().name(e) +
                                  "' is not a reflection");
    f.parts.push_back(idx);
  }
  if (product_of(ctx, f.parts) != target)
    throw std::invalid_argument("factorization product != target");
  return f;
}

Factorization parse_factorization(const GroupContext& ctx,
                                  const std::string& text) {
  std::vector<ElemId> elems;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    elems.push_back(ctx.group().id_of(tok));
  }
  if (elems.empty()) throw std::invalid_argument("empty factorization");
  ElemId target = 0;
  for (ElemId e : elems) target = ctx.group().mul(target, e);
  return make_factorization(ctx, target, elems);
}

std::string factorization_to_string(const GroupContext& ctx,
                                    const Factorization& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.parts.size(); ++i) {
    if (i) os << ",";
    os << ctx.group().name(ctx.refl_elem(f.parts[i]));
  }
  return os.str();
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (size_t c = 0; c < counts.size(); ++c) {
    if (!counts[c]) continue;
    if (!first) os << ",";
    os << (c + 1) << "^" << counts[c];
    first = false;
  }
  os << "}";
  return os.str();
}

int Signature::total() const {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

Signature signature(const GroupContext& ctx, const Factorization& f) {
  Signature s;
  s.counts.assign(ctx.refl().classes.size(), 0);
  for (int r : f.parts) ++s.counts[ctx.refl_class(r)];
  return s;
}

Factorization hurwitz_move(const GroupContext& ctx, const Factorization& f,
                           int i) {
  if (i < 0 || i + 1 >= static_cast<int>(f.length()))
    throw std::out_of_range("hurwitz move index out of range");
  Factorization g = f;
  int a = f.parts[i], b = f.parts[i + 1];
  g.parts[i] = b;
  g.parts[i + 1] = ctx.conj_by(a, b);
  return g;
}

Factorization inverse_hurwitz_move(const GroupContext& ctx,
                                   const Factorization& f, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(f.length()))
    throw std::out_of_range("hurwitz move index out of range");
  Factorization g = f;
  int a = f.parts[i], b = f.parts[i + 1];
  g.parts[i] = ctx.conj_by_inv(b, a);
  g.parts[i + 1] = a;
  return g;
}

Factorization apply_braid(const GroupContext& ctx, const Factorization& f,
                          const BraidWord& w) {
  Factorization g = f;
  for (const BraidGen& m : w)
    g = m.inverse ? inverse_hurwitz_move(ctx, g, m.index)
                  : hurwitz_move(ctx, g, m.index);
  return g;
}

OrbitReport orbit(const GroupContext& ctx, const Factorization& f,
                  size_t cap) {
  check_packable(f);
  size_t len = f.length();
  OrbitReport rep;
  rep.representative = f;
  rep.signature = signature(ctx, f);
  rep.appearing.assign(len, {});

  std::unordered_set<uint64_t> seen{pack(f.parts)};
  std::vector<uint64_t> queue{pack(f.parts)};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> parts = unpack(queue[head], len);
    for (size_t i = 0; i < len; ++i) rep.appearing[i].insert(parts[i]);
    Factorization cur{f.target, std::move(parts)};
    for (int i = 0; i + 1 < static_cast<int>(len); ++i) {
      for (bool inv : {false, true}) {
        Factorization next = inv ? inverse_hurwitz_move(ctx, cur, i)
                                 : hurwitz_move(ctx, cur, i);
        uint64_t key = pack(next.parts);
        if (seen.insert(key).second) {
          if (seen.size() > cap) {
            rep.truncated = true;
            rep.size = seen.size();
            return rep;
          }
          queue.push_back(key);
        }
      }
    }
  }
  rep.size = queue.size();
  rep.members.reserve(queue.size());
  std::sort(queue.begin(), queue.end(),
            [len](uint64_t a, uint64_t b) {
              return unpack(a, len) < unpack(b, len);
            });
  for (uint64_t key : queue)
    rep.members.push_back({f.target, unpack(key, len)});
  return rep;
}

OrbitSearchResult orbit_search(
    const GroupContext& ctx, const Factorization& f,
    const std::function<bool(const Factorization&)>& goal, size_t budget) {
  check_packable(f);
  size_t len = f.length();
  OrbitSearchResult res;
  std::unordered_map<uint64_t, std::pair<uint64_t, BraidGen>> parent;
  uint64_t root = pack(f.parts);
  parent.emplace(root, std::make_pair(root, BraidGen{}));
  std::vector<uint64_t> queue{root};
  auto emit = [&](uint64_t key) {
    res.found = true;
    res.member = Factorization{f.target, unpack(key, len)};
    BraidWord w;
    while (key != root) {
      auto& [prev, mv] = parent.at(key);
      w.push_back(mv);
      key = prev;
    }
    std::reverse(w.begin(), w.end());
    res.word = std::move(w);
  };
  if (goal(f)) {
    emit(root);
    return res;
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Factorization cur{f.target, unpack(queue[head], len)};
    for (int i = 0; i + 1 < static_cast<int>(len); ++i) {
      for (bool inv : {false, true}) {
        Factorization next = inv ? inverse_hurwitz_move(ctx, cur, i)
                                 : hurwitz_move(ctx, cur, i);
        uint64_t key = pack(next.parts);
        if (parent.emplace(key, std::make_pair(queue[head], BraidGen{i, inv}))
                .second) {
          if (goal(next)) {
            emit(key);
            return res;
          }
          if (parent.size() >= budget) return res;  // budget exhausted
          queue.push_back(key);
        }
      }
    }
  }
  res.exhausted = true;
  return res;
}

std::pair<Factorization, BraidWord> sort_to_pattern(
    const GroupContext& ctx, const Factorization& f,
    const std::vector<int>& pattern) {
  Signature want;
  want.counts.assign(ctx.refl().classes.size(), 0);
  if (pattern.size() != f.length())
    throw std::invalid_argument("pattern length mismatch");
  for (int c : pattern) ++want.counts.at(c);
  if (!(want == signature(ctx, f)))
    throw std::invalid_argument("pattern is not a permutation of signature");

  // Left-to-right scan: when position i holds the wrong class, pull the
  // next element of the desired class leftward with moves s_{j-1}..s_i,
  // which transports it unconjugated.
  Factorization cur = f;
  BraidWord word;
  for (size_t i = 0; i < cur.length(); ++i) {
    if (ctx.refl_class(cur.parts[i]) == pattern[i]) continue;
    size_t j = i + 1;
    while (j < cur.length() && ctx.refl_class(cur.parts[j]) != pattern[i]) ++j;
    if (j == cur.length())
      throw std::logic_error("sort_to_pattern: class exhausted");
    for (size_t k = j; k > i; --k) {
      cur = hurwitz_move(ctx, cur, static_cast<int>(k - 1));
      word.push_back({static_cast<int>(k - 1), false});
    }
  }
  return {cur, word};
}

namespace {

// Union, over both positions of a length-two orbit, of the appearing
// reflections belonging to each class.
std::vector<std::set<int>> appearing_by_class(const GroupContext& ctx,
                                              const OrbitReport& rep) {
  std::vector<std::set<int>> out(ctx.refl().classes.size());
  for (const auto& pos : rep.appearing)
    for (int r : pos) out[ctx.refl_class(r)].insert(r);
  return out;
}

std::set<int> whole_class(const GroupContext& ctx, int cls) {
  std::set<int> out;
  for (ElemId e : ctx.refl().classes[cls]) out.insert(ctx.refl_index(e));
  return out;
}

std::set<int> squares_of(const GroupContext& ctx, const std::set<int>& s) {
  std::set<int> out;
  for (int r : s) out.insert(ctx.square_idx(r));
  return out;
}

std::set<int> set_union(std::set<int> a, const std::set<int>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

void fail(PairProfile& p, const std::string& why) {
  if (p.detail.empty()) p.detail = why;
}

// Shared check: the orbit has size three and exactly three of the four
// class members appear (the "three of four" pattern for same-class pairs
// in the rank-two groups).
void check_three_of_four(const GroupContext& ctx, PairProfile& p, int cls) {
  if (p.appearing_by_class[cls].size() != 3)
    fail(p, "expected exactly 3 class members appearing");
  if (whole_class(ctx, cls).size() != 4)
    fail(p, "class does not have 4 elements");
}

}  // namespace

PairProfile pair_orbit_profile(const GroupContext& ctx, int t1, int t2) {
  ElemId e1 = ctx.refl_elem(t1), e2 = ctx.refl_elem(t2);
  Factorization f{ctx.group().mul(e1, e2), {t1, t2}};
  OrbitReport rep = orbit(ctx, f);

  PairProfile p;
  p.size = rep.size;
  p.appearing_by_class = appearing_by_class(ctx, rep);
  int c1 = ctx.refl_class(t1), c2 = ctx.refl_class(t2);
  const std::string& gname = ctx.name();

  if (t1 == t2) {
    p.tag = "equal";
    p.expected_size = 1;
  } else if (gname == "g4") {
    if (e2 == ctx.group().inv(e1)) {
      p.tag = "inverse";
      p.expected_size = 2;
    } else if (c1 == c2) {
      p.tag = "same-class";
      p.expected_size = 3;
      check_three_of_four(ctx, p, c1);
    } else {
      p.tag = "cross-class";
      p.expected_size = 4;
      // R_i = {t_i, t_i'} u squares of the two appearing R_j elements.
      for (int a = 0; a < 2; ++a) {
        int ca = a ? c2 : c1, cb = a ? c1 : c2;
        if (p.appearing_by_class[ca].size() != 2 ||
            p.appearing_by_class[cb].size() != 2)
          fail(p, "expected two appearing elements per class");
        else if (set_union(p.appearing_by_class[ca],
                           squares_of(ctx, p.appearing_by_class[cb])) !=
                 whole_class(ctx, ca))
          fail(p, "appearing elements and cross-squares do not cover class");
      }
    }
  } else if (gname == "g5") {
    const G5Structure& s5 = ctx.g5();
    if (ctx.commutes(t1, t2)) {
      p.tag = "commuting-set";
      p.expected_size = 2;
      const auto& cs = s5.commuting_set_of[t1];
      if (std::find(cs.begin(), cs.end(), t2) == cs.end())
        fail(p, "commuting element outside the commuting set");
    } else if (c1 == c2) {
      p.tag = "same-class";
      p.expected_size = 3;
      check_three_of_four(ctx, p, c1);
    } else {
      int rel = c1 ^ c2;  // 1 adjacent, 2 square, 3 non-adjacent
      if (rel == 2) {
        p.tag = "square";
        p.expected_size = 4;
        // R_{c1} = {t1, t2} u {squares of the two square-class elements}.
        for (int a = 0; a < 2; ++a) {
          int ca = a ? c2 : c1, cb = a ? c1 : c2;
          if (p.appearing_by_class[ca].size() != 2 ||
              p.appearing_by_class[cb].size() != 2)
            fail(p, "expected two appearing elements per class");
          else if (set_union(p.appearing_by_class[ca],
                             squares_of(ctx, p.appearing_by_class[cb])) !=
                   whole_class(ctx, ca))
            fail(p, "appearing elements and squares do not cover class");
        }
      } else if (rel == 1) {
        p.tag = "adjacent";
        p.expected_size = 4;
        // R_{c1} = {t1, t2} u {adjacent partners of the two others}.
        for (int a = 0; a < 2; ++a) {
          int ca = a ? c2 : c1, cb = a ? c1 : c2;
          std::set<int> partners;
          for (int r : p.appearing_by_class[cb])
            partners.insert(s5.adjacent_of[r]);
          if (p.appearing_by_class[ca].size() != 2 ||
              p.appearing_by_class[cb].size() != 2)
            fail(p, "expected two appearing elements per class");
          else if (set_union(p.appearing_by_class[ca], partners) !=
                   whole_class(ctx, ca))
            fail(p, "appearing elements and adjacents do not cover class");
        }
      } else {
        p.tag = "non-adjacent";
        p.expected_size = 6;
      }
    }
  } else if (gname == "g25") {
    const G25Structure& s25 = ctx.g25();
    if (ctx.commutes(t1, t2)) {
      int tr1 = s25.triple_of[t1], tr2 = s25.triple_of[t2];
      if (tr1 == tr2) {
        p.tag = "commuting-set";
      } else if (s25.inverse_triple_of[tr1] == tr2) {
        p.tag = "inverse-triple";
      } else {
        p.tag = "commuting-set";
        fail(p, "commuting pair not in same or inverse triples");
      }
      p.expected_size = 2;
    } else if (c1 == c2) {
      p.tag = "same-class";
      p.expected_size = 3;
      if (p.appearing_by_class[c1].size() != 3)
        fail(p, "expected exactly 3 class members appearing");
    } else {
      p.tag = "cross-class";
      p.expected_size = 4;
      if (p.appearing_by_class[c1].size() != 2 ||
          p.appearing_by_class[c2].size() != 2)
        fail(p, "expected two appearing elements per class");
      // No two appearing elements share a triple or sit in inverse triples.
      std::vector<int> all;
      for (const auto& s : p.appearing_by_class) all.insert(all.end(), s.begin(), s.end());
      for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = a + 1; b < all.size(); ++b) {
          int ta = s25.triple_of[all[a]], tb = s25.triple_of[all[b]];
          if (ta == tb) fail(p, "appearing elements share a triple");
          if (s25.inverse_triple_of[ta] == tb)
            fail(p, "appearing elements lie in inverse triples");
        }
    }
  } else {
    throw std::invalid_argument("pair orbit checks defined for g4, g5, g25 only");
  }

  if (p.size != p.expected_size) fail(p, "orbit size mismatch");
  p.conforms = p.detail.empty();
  return p;
}

PairOrbitCheckReport verify_pair_orbits(const GroupContext& ctx) {
  PairOrbitCheckReport rep;
  int n = ctx.num_reflections();
  for (int t1 = 0; t1 < n; ++t1)
    for (int t2 = 0; t2 < n; ++t2) {
      PairProfile p = pair_orbit_profile(ctx, t1, t2);
      ++rep.pairs_checked;
      if (!p.conforms)
        rep.violations.push_back(
            "(" + ctx.group().name(ctx.refl_elem(t1)) + "," +
            ctx.group().name(ctx.refl_elem(t2)) + ") [" + p.tag +
            "]: " + p.detail);
    }
  return rep;
}

int first_square_pair_position(const Factorization& f) {
  for (size_t i = 0; i + 1 < f.length(); ++i)
    if (f.parts[i] == f.parts[i + 1]) return static_cast<int>(i);
  return -1;
}

namespace {

SquarePairResult square_pair_search(
    const GroupContext& ctx, const Factorization& f,
    const std::function<bool(int)>& class_ok, size_t budget) {
  auto goal = [&](const Factorization& g) {
    for (size_t i = 0; i + 1 < g.length(); ++i)
      if (g.parts[i] == g.parts[i + 1] && class_ok(ctx.refl_class(g.parts[i])))
        return true;
    return false;
  };
  OrbitSearchResult r = orbit_search(ctx, f, goal, budget);
  SquarePairResult out;
  if (r.found) {
    out.status = SquarePairResult::Status::found;
    out.member = r.member;
    out.word = std::move(r.word);
    for (size_t i = 0; i + 1 < out.member.length(); ++i)
      if (out.member.parts[i] == out.member.parts[i + 1] &&
          class_ok(ctx.refl_class(out.member.parts[i]))) {
        out.position = static_cast<int>(i);
        break;
      }
  } else {
    out.status = r.exhausted ? SquarePairResult::Status::orbit_exhausted
                             : SquarePairResult::Status::budget_exhausted;
  }
  return out;
}

}  // namespace

SquarePairResult find_square_pair(const GroupContext& ctx,
                                  const Factorization& f, size_t budget) {
  if (f.length() < 2)
    throw std::invalid_argument("factorization too short for pair search");
  return square_pair_search(ctx, f, [](int) { return true; }, budget);
}

SquarePairResult find_square_pair_of_class(const GroupContext& ctx,
                                           const Factorization& f, int cls,
                                           size_t budget) {
  return square_pair_search(ctx, f, [cls](int c) { return c == cls; }, budget);
}

}  // namespace refl
