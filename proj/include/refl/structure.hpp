#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "refl/group.hpp"

namespace refl {

struct StructureViolation : std::runtime_error {
  explicit StructureViolation(const std::string& what)
      : std::runtime_error("structure violation: " + what) {}
};

/// Reflections, hyperplanes and reflection conjugacy classes.  Class 0 is
/// labeled R1 and anchored to the class of the first generator; in G5 the
/// remaining labels are chosen so R1/R3 and R2/R4 are square classes and
/// R1/R2, R3/R4 are adjacent classes.
struct ReflectionData {
  std::vector<ElemId> reflections;  // sorted by id
  std::vector<int> refl_index;      // element id -> index in reflections, or -1
  std::vector<int> hyperplane_of;   // reflection index -> hyperplane id
  int num_hyperplanes = 0;
  std::vector<std::vector<ElemId>> classes;  // label order R1, R2, ...
  std::vector<int> class_of;                 // reflection index -> class index
  std::vector<int> class_value;              // class index -> det exponent of omega
};

struct CoxeterData {
  int h = 0;
  std::vector<ElemId> coxeter_elements;      // sorted
  std::vector<std::vector<ElemId>> classes;  // label order C1, C2, ...
  std::vector<int> class_value;              // class index -> det exponent
};

/// The four structural maps of G5, keyed by reflection index.
struct G5Structure {
  std::vector<int> square_of;
  std::vector<int> adjacent_of;
  std::vector<int> semisquare_of;
  std::vector<std::array<int, 4>> commuting_set_of;  // sorted
};

/// Commuting triples within each reflection class of G25.
struct G25Structure {
  std::vector<std::array<int, 3>> triples;  // triple id -> reflection indices
  std::vector<int> triple_of;               // reflection index -> triple id
  std::vector<int> inverse_triple_of;       // triple id -> triple id
};

struct ElementRecord {
  ElemId id;
  std::string name;
  int order;
  std::string det;
  std::string class_label;  // "R1", "C2", or "" for other elements
  std::string inverse_name;
  std::string square_name;
};

/// Immutable bundle of a constructed group with every derived structure
/// and the fast lookup tables used by the Hurwitz machinery.
class GroupContext {
 public:
  explicit GroupContext(const GroupSpec& spec);

  /// Cached shared instance for a built-in group name.
  static const GroupContext& get(const std::string& name);

  const FiniteMatrixGroup& group() const { return group_; }
  const std::string& name() const { return group_.spec().name; }
  const ReflectionData& refl() const { return refl_; }
  const CoxeterData& coxeter() const { return cox_; }
  const G5Structure& g5() const;
  const G25Structure& g25() const;

  int num_reflections() const { return static_cast<int>(refl_.reflections.size()); }
  int refl_index(ElemId e) const { return refl_.refl_index[e]; }
  ElemId refl_elem(int idx) const { return refl_.reflections[idx]; }
  int refl_class(int idx) const { return refl_.class_of[idx]; }

  /// Index of s^-1 r s (arguments and result are reflection indices).
  int conj_by(int r, int s) const { return conj_[r * num_refl_ + s]; }
  /// Index of s r s^-1.
  int conj_by_inv(int r, int s) const { return conj_inv_[r * num_refl_ + s]; }
  int square_idx(int r) const { return square_[r]; }
  bool commutes(int r, int s) const { return commute_[r * num_refl_ + s]; }

  bool is_coxeter(ElemId e) const { return is_coxeter_[e]; }
  /// Product of the generators in declared order (AB or ABC).
  ElemId default_coxeter() const { return default_coxeter_; }

  std::string class_label_of(ElemId e) const;
  ElementRecord element_query(ElemId e) const;

  /// The two order-24 subgroups of G5 generated by R1 u R3 and R2 u R4.
  std::pair<std::vector<ElemId>, std::vector<ElemId>> g4_subgroups_of_g5()
      const;

 private:
  FiniteMatrixGroup group_;
  ReflectionData refl_;
  CoxeterData cox_;
  std::optional<G5Structure> g5_;
  std::optional<G25Structure> g25_;
  int num_refl_ = 0;
  std::vector<int> conj_, conj_inv_, square_;
  std::vector<char> commute_, is_coxeter_;
  ElemId default_coxeter_ = 0;

  void build_reflection_data();
  void build_coxeter_data();
  void build_tables();
  void build_g5_structure();
  void build_g25_structure();
};

}  // namespace refl
