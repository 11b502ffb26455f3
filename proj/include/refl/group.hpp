#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "refl/matrix.hpp"

namespace refl {

using ElemId = uint16_t;

struct ClosureBoundExceeded : std::runtime_error {
  ClosureBoundExceeded() : std::runtime_error("group closure exceeded bound") {}
};
struct RelationViolation : std::runtime_error {
  explicit RelationViolation(const std::string& rel)
      : std::runtime_error("declared relation fails: " + rel) {}
};

/// Generators plus defining relations for one of the supported groups.
/// Relations are word pairs over the generator letters, e.g. "ABA=BAB".
struct GroupSpec {
  std::string name;  // g4 | g5 | g25
  int rank = 0;
  std::vector<SquareMatrix> generators;
  std::vector<std::string> relations;

  /// Parses the generator data file format: "group NAME", "rank N",
  /// "relation W=W" lines, then one "matrix" block per generator with
  /// semicolon-separated cyclotomic entries.
  static GroupSpec parse(const std::string& text);
  std::string serialize() const;

  /// The pinned built-in spec for g4, g5 or g25.
  static const GroupSpec& builtin(const std::string& name);

  uint64_t content_hash() const;
};

/// A finite matrix group interned by closure BFS from its generators.
/// Element 0 is the identity; ids follow word length, then lex order of
/// the shortest generator word, so they are stable across runs.
class FiniteMatrixGroup {
 public:
  /// Closure bound guards against bad generator data.
  static FiniteMatrixGroup closure(const GroupSpec& spec,
                                   size_t bound = 10000);

  const GroupSpec& spec() const { return spec_; }
  size_t size() const { return elements_.size(); }
  int rank() const { return spec_.rank; }
  const SquareMatrix& matrix(ElemId id) const { return elements_[id]; }

  ElemId mul(ElemId a, ElemId b) const { return cayley_[a * size() + b]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId conj(ElemId x, ElemId g) const {  // g^-1 x g
    return mul(mul(inv(g), x), g);
  }

  /// Shortest-lex generator word, run-length compressed ("B2AB" = BBAB).
  const std::string& name(ElemId id) const { return names_[id]; }
  /// Inverse of name(); throws std::invalid_argument on unknown names.
  ElemId id_of(const std::string& name) const;

  ElemId generator_id(size_t i) const { return gen_ids_.at(i); }
  size_t num_generators() const { return gen_ids_.size(); }

  int element_order(ElemId id) const;

  /// Conjugation orbits of a subset (which must be closed under
  /// conjugation); classes sorted by smallest member id, members sorted.
  std::vector<std::vector<ElemId>> conjugacy_classes(
      const std::vector<ElemId>& subset) const;

  /// Subgroup generated by a set of elements, as a sorted id list.
  std::vector<ElemId> subgroup(const std::vector<ElemId>& gens) const;

 private:
  GroupSpec spec_;
  std::vector<SquareMatrix> elements_;
  std::vector<ElemId> cayley_;   // |W| x |W|
  std::vector<ElemId> inverse_;  // |W|
  std::vector<std::string> names_;
  std::vector<ElemId> gen_ids_;
};

}  // namespace refl
