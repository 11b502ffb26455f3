#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "refl/cyclotomic.hpp"

namespace refl {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("matrix dimension mismatch") {}
};

/// Dense dim x dim matrix over the 12th cyclotomic field, dim in {2, 3}.
/// Entries are always in reduced form, so operator== is mathematical
/// equality and matrices can be hashed and interned.
class SquareMatrix {
 public:
  explicit SquareMatrix(int dim)
      : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }
  Cyclotomic& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
  const Cyclotomic& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * dim_ + j];
  }

  SquareMatrix operator*(const SquareMatrix& o) const;
  bool operator==(const SquareMatrix& o) const {
    return dim_ == o.dim_ && e_ == o.e_;
  }
  bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

  Cyclotomic det() const;
  bool has_eigenvalue(const Cyclotomic& lambda) const;

  /// Rank of (M - I); 1 exactly for reflections, 0 for the identity.
  int fixed_space_rank() const;

  /// Canonical key for the fixed hyperplane of a reflection: the reduced
  /// row echelon form of (M - I), flattened to a string.  Two reflections
  /// share a hyperplane iff their keys agree.
  std::string hyperplane_key() const;

  int order(int cap = 64) const;

  size_t hash() const;
  std::string to_string() const;

 private:
  int dim_;
  std::vector<Cyclotomic> e_;
};

struct MatrixHash {
  size_t operator()(const SquareMatrix& m) const { return m.hash(); }
};

}  // namespace refl
