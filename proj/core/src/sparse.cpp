#include "diaghom/sparse.hpp"

#include <algorithm>
#include <map>

namespace diaghom {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         const std::vector<std::tuple<int, int, Scalar>>& entries,
                                         const Ring& ring) {
  SparseMatrix m(rows, cols);
  std::vector<std::map<int, Scalar>> acc(cols);
  for (const auto& [r, c, v] : entries) {
    require(r >= 0 && r < rows && c >= 0 && c < cols, Errc::SizeMismatch, "triplet out of range");
    auto it = acc[c].find(r);
    if (it == acc[c].end())
      acc[c].emplace(r, v);
    else
      it->second = ring.add(it->second, v);
  }
  for (int c = 0; c < cols; ++c) {
    SparseVec col;
    col.reserve(acc[c].size());
    for (auto& [r, v] : acc[c])
      if (!v.is_zero()) col.push_back({static_cast<int32_t>(r), std::move(v)});
    m.data_[c] = std::move(col);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& c : data_) total += c.size();
  return total;
}

void SparseMatrix::set_column(int c, SparseVec v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i].row >= 0 && v[i].row < rows_, Errc::SizeMismatch, "entry row out of range");
    require(i == 0 || v[i - 1].row < v[i].row, Errc::Malformed, "column not sorted");
    require(!v[i].val.is_zero(), Errc::Malformed, "stored zero entry");
  }
  data_.at(c) = std::move(v);
}

Scalar SparseMatrix::entry(int r, int c) const {
  const auto& col = data_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, int row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->val;
  return Scalar();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<std::size_t> counts(rows_, 0);
  for (const auto& col : data_)
    for (const auto& e : col) ++counts[e.row];
  for (int r = 0; r < rows_; ++r) t.data_[r].reserve(counts[r]);
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : data_[c]) t.data_[e.row].push_back({c, e.val});
  return t;  // rows visited in column order => each transposed column sorted
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other, const Ring& ring) const {
  require(cols_ == other.rows(), Errc::SizeMismatch, "matrix product shape mismatch");
  SparseMatrix out(rows_, other.cols());
  for (int c = 0; c < other.cols(); ++c) {
    SparseVec acc;
    for (const auto& e : other.column(c)) acc = vec_axpy(acc, e.val, data_[e.row], ring);
    out.data_[c] = std::move(acc);
  }
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int c = 0; c < cols_; ++c) {
    const auto& a = data_[c];
    const auto& b = o.data_[c];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].row != b[i].row || !(a[i].val == b[i].val)) return false;
  }
  return true;
}

SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b, const Ring& ring) {
  if (c.is_zero() || b.empty()) return a;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      Scalar v = ring.mul(c, b[j].val);
      if (!v.is_zero()) out.push_back({b[j].row, std::move(v)});
      ++j;
    } else {
      Scalar v = ring.add(a[i].val, ring.mul(c, b[j].val));
      if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace diaghom
