#include "refl/matrix.hpp"

#include <sstream>

namespace refl {

SquareMatrix SquareMatrix::identity(int dim) {
  SquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic::one();
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch();
  SquareMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Cyclotomic s;
      for (int k = 0; k < dim_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Cyclotomic SquareMatrix::det() const {
  if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  // 3x3 by cofactor expansion along the first row
  Cyclotomic d;
  d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
  d = d - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
  d = d + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  return d;
}

bool SquareMatrix::has_eigenvalue(const Cyclotomic& lambda) const {
  SquareMatrix shifted = *this;
  for (int i = 0; i < dim_; ++i)
    shifted.at(i, i) = shifted.at(i, i) - lambda;
  return shifted.det().is_zero();
}

namespace {

// In-place reduced row echelon form; returns rank.
int rref(std::vector<std::vector<Cyclotomic>>& rows) {
  int n = static_cast<int>(rows.size());
  int m = n ? static_cast<int>(rows[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Cyclotomic inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x = inv * x;
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (int j = 0; j < m; ++j)
        rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int SquareMatrix::fixed_space_rank() const {
  std::vector<std::vector<Cyclotomic>> rows(dim_,
                                            std::vector<Cyclotomic>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      rows[i][j] = at(i, j);
      if (i == j) rows[i][j] = rows[i][j] - Cyclotomic::one();
    }
  return rref(rows);
}

std::string SquareMatrix::hyperplane_key() const {
  std::vector<std::vector<Cyclotomic>> rows(dim_,
                                            std::vector<Cyclotomic>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      rows[i][j] = at(i, j);
      if (i == j) rows[i][j] = rows[i][j] - Cyclotomic::one();
    }
  int rank = rref(rows);
  std::ostringstream os;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < dim_; ++j) os << rows[i][j].to_string() << ";";
  return os.str();
}

int SquareMatrix::order(int cap) const {
  SquareMatrix id = identity(dim_);
  SquareMatrix p = *this;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * *this;
  }
  throw std::runtime_error("element order exceeds cap");
}

size_t SquareMatrix::hash() const {
  size_t h = static_cast<size_t>(dim_);
  for (const auto& x : e_) h = h * 0x9e3779b97f4a7c15ull + x.hash();
  return h;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      os << at(i, j).to_string();
      if (j + 1 < dim_) os << "; ";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace refl
