#include "refl/structure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace refl {

namespace {

// det exponent: reflections and Coxeter elements here all have determinant
// omega or omega^2.
int det_exponent(const SquareMatrix& m) {
  Cyclotomic d = m.det();
  if (d == Cyclotomic::omega()) return 1;
  if (d == Cyclotomic::omega() * Cyclotomic::omega()) return 2;
  if (d == Cyclotomic::one()) return 0;
  throw StructureViolation("determinant is not a cube root of unity");
}

}  // namespace

GroupContext::GroupContext(const GroupSpec& spec)
    : group_(FiniteMatrixGroup::closure(spec)) {
  build_reflection_data();
  build_coxeter_data();
  build_tables();
  if (name() == "g5") build_g5_structure();
  if (name() == "g25") build_g25_structure();
  ElemId c = 0;
  for (size_t s = 0; s < group_.num_generators(); ++s)
    c = group_.mul(c, group_.generator_id(s));
  if (!is_coxeter_[c])
    throw StructureViolation("generator product is not a Coxeter element");
  default_coxeter_ = c;
}

const GroupContext& GroupContext::get(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<GroupContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_unique<GroupContext>(
                                 GroupSpec::builtin(name))).first;
  return *it->second;
}

void GroupContext::build_reflection_data() {
  size_t n = group_.size();
  refl_.refl_index.assign(n, -1);
  for (ElemId e = 1; e < n; ++e)
    if (group_.matrix(e).fixed_space_rank() == 1)
      refl_.reflections.push_back(e);
  num_refl_ = static_cast<int>(refl_.reflections.size());
  for (int i = 0; i < num_refl_; ++i) {
    if (group_.element_order(refl_.reflections[i]) != 3)
      throw StructureViolation("reflection of order != 3");
    refl_.refl_index[refl_.reflections[i]] = i;
  }

  // hyperplanes: group reflections by the kernel of (M - I)
  std::unordered_map<std::string, int> plane_ids;
  refl_.hyperplane_of.resize(num_refl_);
  for (int i = 0; i < num_refl_; ++i) {
    std::string key = group_.matrix(refl_.reflections[i]).hyperplane_key();
    auto [it, fresh] = plane_ids.emplace(key, refl_.num_hyperplanes);
    if (fresh) ++refl_.num_hyperplanes;
    refl_.hyperplane_of[i] = it->second;
  }
  if (refl_.num_hyperplanes * 2 != num_refl_)
    throw StructureViolation("reflections do not pair up on hyperplanes");
  for (int i = 0; i < num_refl_; ++i) {
    ElemId sq = group_.mul(refl_.reflections[i], refl_.reflections[i]);
    int j = refl_.refl_index[sq];
    if (j < 0 || refl_.hyperplane_of[j] != refl_.hyperplane_of[i])
      throw StructureViolation("square of reflection not on same hyperplane");
  }

  // Classes: anchored so R1 is the class of generator A; for G5 the rest
  // are ordered R2 = adjacent (same determinant), R3 = squares of R1,
  // R4 = the remainder.
  auto raw = group_.conjugacy_classes(refl_.reflections);
  ElemId gen_a = group_.generator_id(0);
  std::vector<int> order;
  int a_cls = -1;
  for (size_t c = 0; c < raw.size(); ++c)
    if (std::find(raw[c].begin(), raw[c].end(), gen_a) != raw[c].end())
      a_cls = static_cast<int>(c);
  if (a_cls < 0) throw StructureViolation("generator A is not a reflection");
  if (name() == "g5") {
    if (raw.size() != 4) throw StructureViolation("G5 expects 4 classes");
    int val_a = det_exponent(group_.matrix(gen_a));
    ElemId a_sq = group_.mul(gen_a, gen_a);
    int sq_cls = -1, adj_cls = -1, rest = -1;
    for (size_t c = 0; c < raw.size(); ++c) {
      if (static_cast<int>(c) == a_cls) continue;
      bool has_sq =
          std::find(raw[c].begin(), raw[c].end(), a_sq) != raw[c].end();
      int val = det_exponent(group_.matrix(raw[c][0]));
      if (has_sq)
        sq_cls = static_cast<int>(c);
      else if (val == val_a)
        adj_cls = static_cast<int>(c);
      else
        rest = static_cast<int>(c);
    }
    if (sq_cls < 0 || adj_cls < 0 || rest < 0)
      throw StructureViolation("G5 class layout not recognized");
    order = {a_cls, adj_cls, sq_cls, rest};
  } else {
    order.push_back(a_cls);
    for (size_t c = 0; c < raw.size(); ++c)
      if (static_cast<int>(c) != a_cls) order.push_back(static_cast<int>(c));
  }
  refl_.class_of.assign(num_refl_, -1);
  for (size_t lbl = 0; lbl < order.size(); ++lbl) {
    refl_.classes.push_back(raw[order[lbl]]);
    for (ElemId e : raw[order[lbl]])
      refl_.class_of[refl_.refl_index[e]] = static_cast<int>(lbl);
  }
  for (const auto& cls : refl_.classes) {
    int v = det_exponent(group_.matrix(cls[0]));
    for (ElemId e : cls)
      if (det_exponent(group_.matrix(e)) != v)
        throw StructureViolation("mixed determinants within a class");
    refl_.class_value.push_back(v);
  }
}

void GroupContext::build_coxeter_data() {
  int n = group_.rank();
  int total = num_refl_ + refl_.num_hyperplanes;
  if (total % n != 0)
    throw StructureViolation("non-integer Coxeter number");
  cox_.h = total / n;

  std::vector<Cyclotomic> primitive;
  for (int k = 1; k < cox_.h; ++k)
    if (std::gcd(k, cox_.h) == 1)
      primitive.push_back(Cyclotomic::zeta_pow(12 / cox_.h * k));

  is_coxeter_.assign(group_.size(), 0);
  for (ElemId e = 0; e < group_.size(); ++e)
    for (const auto& lam : primitive)
      if (group_.matrix(e).has_eigenvalue(lam)) {
        is_coxeter_[e] = 1;
        cox_.coxeter_elements.push_back(e);
        break;
      }

  // C-class labels ordered by determinant exponent (C1 has det omega),
  // then by smallest member id.
  auto raw = group_.conjugacy_classes(cox_.coxeter_elements);
  std::vector<std::pair<std::pair<int, ElemId>, size_t>> keyed;
  for (size_t c = 0; c < raw.size(); ++c)
    keyed.push_back({{det_exponent(group_.matrix(raw[c][0])), raw[c][0]}, c});
  std::sort(keyed.begin(), keyed.end());
  for (auto& [key, c] : keyed) {
    cox_.classes.push_back(raw[c]);
    cox_.class_value.push_back(key.first);
  }
}

void GroupContext::build_tables() {
  int r = num_refl_;
  conj_.assign(static_cast<size_t>(r) * r, -1);
  conj_inv_.assign(static_cast<size_t>(r) * r, -1);
  commute_.assign(static_cast<size_t>(r) * r, 0);
  square_.resize(r);
  for (int i = 0; i < r; ++i) {
    ElemId ei = refl_.reflections[i];
    square_[i] = refl_.refl_index[group_.mul(ei, ei)];
    for (int j = 0; j < r; ++j) {
      ElemId ej = refl_.reflections[j];
      ElemId c = group_.conj(ei, ej);
      int ci = refl_.refl_index[c];
      if (ci < 0) throw StructureViolation("conjugate of reflection escapes");
      conj_[static_cast<size_t>(i) * r + j] = ci;
      conj_inv_[static_cast<size_t>(i) * r + j] =
          refl_.refl_index[group_.conj(ei, group_.inv(ej))];
      commute_[static_cast<size_t>(i) * r + j] =
          group_.mul(ei, ej) == group_.mul(ej, ei);
    }
  }
}

void GroupContext::build_g5_structure() {
  int r = num_refl_;
  G5Structure s;
  s.square_of.assign(r, -1);
  s.adjacent_of.assign(r, -1);
  s.semisquare_of.assign(r, -1);
  s.commuting_set_of.resize(r);
  // class pairing under the R1..R4 labels
  auto adjacent_class = [](int c) { return c ^ 1; };     // R1<->R2, R3<->R4
  auto square_class = [](int c) { return c ^ 2; };       // R1<->R3, R2<->R4
  auto nonadjacent_class = [](int c) { return c ^ 3; };  // R1<->R4, R2<->R3
  for (int i = 0; i < r; ++i) {
    int cls = refl_.class_of[i];
    int sq = square_[i];
    if (refl_.class_of[sq] != square_class(cls))
      throw StructureViolation("square class pairing fails");
    s.square_of[i] = sq;

    int val = refl_.class_value[cls];
    for (int j = 0; j < r; ++j) {
      if (refl_.class_of[j] != adjacent_class(cls)) continue;
      if (!commutes(i, j)) continue;
      if (refl_.class_value[refl_.class_of[j]] != val)
        throw StructureViolation("adjacent class determinant mismatch");
      if (s.adjacent_of[i] != -1)
        throw StructureViolation("adjacent pair not unique");
      s.adjacent_of[i] = j;
    }
    if (s.adjacent_of[i] < 0)
      throw StructureViolation("adjacent pair missing");

    for (int j = 0; j < r; ++j) {
      if (refl_.class_of[j] != nonadjacent_class(cls)) continue;
      if (square_[j] != s.adjacent_of[i]) continue;
      if (s.semisquare_of[i] != -1)
        throw StructureViolation("semi-square not unique");
      s.semisquare_of[i] = j;
    }
    if (s.semisquare_of[i] < 0)
      throw StructureViolation("semi-square missing");
  }
  for (int i = 0; i < r; ++i) {
    std::array<int, 4> set{i, s.square_of[i], s.adjacent_of[i],
                           s.semisquare_of[i]};
    std::sort(set.begin(), set.end());
    for (int a : set)
      for (int b : set)
        if (!commutes(a, b))
          throw StructureViolation("commuting set does not commute");
    s.commuting_set_of[i] = set;
  }
  g5_ = std::move(s);
}

void GroupContext::build_g25_structure() {
  int r = num_refl_;
  G25Structure s;
  s.triple_of.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    if (s.triple_of[i] >= 0) continue;
    std::array<int, 3> triple{i, -1, -1};
    int found = 0;
    for (int j = 0; j < r; ++j) {
      if (j == i || refl_.class_of[j] != refl_.class_of[i]) continue;
      if (!commutes(i, j)) continue;
      if (found >= 2) throw StructureViolation("triple too large");
      triple[1 + found++] = j;
    }
    if (found != 2) throw StructureViolation("triple too small");
    if (!commutes(triple[1], triple[2]))
      throw StructureViolation("triple does not commute internally");
    std::sort(triple.begin(), triple.end());
    int id = static_cast<int>(s.triples.size());
    s.triples.push_back(triple);
    for (int m : triple) s.triple_of[m] = id;
  }
  if (s.triples.size() != 8)
    throw StructureViolation("expected 8 triples in G25");

  s.inverse_triple_of.assign(s.triples.size(), -1);
  for (size_t t = 0; t < s.triples.size(); ++t) {
    int inv0 = refl_.refl_index[group_.inv(refl_.reflections[s.triples[t][0]])];
    int target = s.triple_of[inv0];
    for (int m : s.triples[t]) {
      int invm = refl_.refl_index[group_.inv(refl_.reflections[m])];
      if (s.triple_of[invm] != target)
        throw StructureViolation("inverses of a triple scatter");
    }
    if (refl_.class_of[s.triples[target][0]] ==
        refl_.class_of[s.triples[t][0]])
      throw StructureViolation("inverse triple in same class");
    for (int a : s.triples[t])
      for (int b : s.triples[target])
        if (!commutes(a, b))
          throw StructureViolation("triple union does not commute");
    s.inverse_triple_of[t] = target;
  }
  g25_ = std::move(s);
}

const G5Structure& GroupContext::g5() const {
  if (!g5_) throw std::logic_error("not G5");
  return *g5_;
}

const G25Structure& GroupContext::g25() const {
  if (!g25_) throw std::logic_error("not G25");
  return *g25_;
}

std::string GroupContext::class_label_of(ElemId e) const {
  int ri = refl_.refl_index[e];
  if (ri >= 0) return "R" + std::to_string(refl_.class_of[ri] + 1);
  if (is_coxeter_[e]) {
    for (size_t c = 0; c < cox_.classes.size(); ++c)
      if (std::find(cox_.classes[c].begin(), cox_.classes[c].end(), e) !=
          cox_.classes[c].end())
        return "C" + std::to_string(c + 1);
  }
  return "";
}

ElementRecord GroupContext::element_query(ElemId e) const {
  if (e >= group_.size()) throw std::invalid_argument("unknown element id");
  ElementRecord rec;
  rec.id = e;
  rec.name = group_.name(e);
  rec.order = group_.element_order(e);
  rec.det = group_.matrix(e).det().to_string();
  rec.class_label = class_label_of(e);
  rec.inverse_name = group_.name(group_.inv(e));
  rec.square_name = group_.name(group_.mul(e, e));
  return rec;
}

std::pair<std::vector<ElemId>, std::vector<ElemId>>
GroupContext::g4_subgroups_of_g5() const {
  if (name() != "g5") throw std::logic_error("not G5");
  std::vector<ElemId> gens13, gens24;
  for (int i = 0; i < num_refl_; ++i) {
    int c = refl_.class_of[i];
    (c == 0 || c == 2 ? gens13 : gens24).push_back(refl_.reflections[i]);
  }
  auto check = [&](const std::vector<ElemId>& gens) {
    auto sub = group_.subgroup(gens);
    if (sub.size() != 24)
      throw StructureViolation("G4 subgroup has wrong order");
    std::vector<ElemId> sub_refl;
    for (ElemId e : sub)
      if (refl_.refl_index[e] >= 0) sub_refl.push_back(e);
    if (sub_refl != gens)  // both sorted
      throw StructureViolation("subgroup reflections differ from R_i u R_j");
    // a generating braid pair must exist
    for (ElemId a : sub_refl)
      for (ElemId b : sub_refl) {
        if (a == b) continue;
        ElemId aba = group_.mul(group_.mul(a, b), a);
        ElemId bab = group_.mul(group_.mul(b, a), b);
        if (aba == bab && group_.subgroup({a, b}).size() == 24) return sub;
      }
    throw StructureViolation("no braid generating pair in subgroup");
  };
  return {check(gens13), check(gens24)};
}

}  // namespace refl
