#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "diaghom/ring.hpp"

namespace diaghom {

struct Entry {
  int32_t row;
  Scalar val;
};

// Sorted by row, no explicit zeros.
using SparseVec = std::vector<Entry>;

// Column-major exact sparse matrix. Treated as immutable once built:
// construct via from_triplets or set_column, then only read.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMatrix from_triplets(int rows, int cols,
                                    const std::vector<std::tuple<int, int, Scalar>>& entries,
                                    const Ring& ring);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVec& column(int c) const { return data_.at(c); }
  // v must be sorted by row with no zeros.
  void set_column(int c, SparseVec v);
  Scalar entry(int r, int c) const;

  SparseMatrix transpose() const;
  // this * other, with arithmetic in ring.
  SparseMatrix multiply(const SparseMatrix& other, const Ring& ring) const;

  bool operator==(const SparseMatrix& o) const;

 private:
  int rows_, cols_;
  std::vector<SparseVec> data_;
};

// a += c * b (ring arithmetic); both sorted by row.
SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b, const Ring& ring);

}  // namespace diaghom
