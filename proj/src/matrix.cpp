#include "ogc/matrix.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "ogc/error.hpp"

namespace ogc {

SparseMatrix SparseMatrix::from_entries(int rows, int cols, std::vector<Entry> entries) {
  SparseMatrix m(rows, cols);
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
  for (const Entry& x : entries) {
    if (x.row < 0 || x.row >= rows || x.col < 0 || x.col >= cols)
      throw Error(ErrorKind::EdgeOutOfRange, "matrix entry outside shape");
    if (!m.entries_.empty() && m.entries_.back().row == x.row && m.entries_.back().col == x.col) {
      m.entries_.back().value += x.value;
    } else {
      m.entries_.push_back(x);
    }
  }
  std::erase_if(m.entries_, [](const Entry& x) { return x.value == 0; });
  return m;
}

SparseMatrix SparseMatrix::identity(int n) {
  std::vector<Entry> e;
  for (int i = 0; i < n; ++i) e.push_back({i, i, 1});
  return from_entries(n, n, std::move(e));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (const Entry& x : entries_) e.push_back({x.col, x.row, x.value});
  return from_entries(cols_, rows_, std::move(e));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::EdgeOutOfRange, "matrix product shape mismatch");
  // columns of this, indexed by column
  std::vector<std::vector<std::pair<int, std::int64_t>>> by_col(static_cast<std::size_t>(cols_));
  for (const Entry& x : entries_) by_col[x.col].emplace_back(x.row, x.value);
  std::vector<Entry> out;
  std::unordered_map<int, std::int64_t> acc;
  std::size_t k = 0;
  const auto& r = rhs.entries_;
  while (k < r.size()) {
    int col = r[k].col;
    acc.clear();
    for (; k < r.size() && r[k].col == col; ++k)
      for (auto [row, v] : by_col[r[k].row]) acc[row] += v * r[k].value;
    for (auto [row, v] : acc)
      if (v != 0) out.push_back({row, col, v});
  }
  return from_entries(rows_, rhs.cols_, std::move(out));
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::EdgeOutOfRange, "matrix sum shape mismatch");
  std::vector<Entry> e(entries_);
  e.insert(e.end(), rhs.entries_.begin(), rhs.entries_.end());
  return from_entries(rows_, cols_, std::move(e));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const { return *this + rhs.scaled(-1); }

SparseMatrix SparseMatrix::scaled(std::int64_t c) const {
  std::vector<Entry> e(entries_);
  for (Entry& x : e) x.value *= c;
  return from_entries(rows_, cols_, std::move(e));
}

SparseMatrix SparseMatrix::select_cols(const std::vector<int>& cols) const {
  std::vector<std::vector<int>> where(static_cast<std::size_t>(cols_));
  for (std::size_t j = 0; j < cols.size(); ++j) where[cols[j]].push_back(static_cast<int>(j));
  std::vector<Entry> e;
  for (const Entry& x : entries_)
    for (int j : where[x.col]) e.push_back({x.row, j, x.value});
  return from_entries(rows_, static_cast<int>(cols.size()), std::move(e));
}

SparseMatrix SparseMatrix::select_rows(const std::vector<int>& rows) const {
  return transpose().select_cols(rows).transpose();
}

SparseMatrix SparseMatrix::hconcat(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw Error(ErrorKind::EdgeOutOfRange, "hconcat row mismatch");
  std::vector<Entry> e(entries_);
  for (const Entry& x : rhs.entries_) e.push_back({x.row, x.col + cols_, x.value});
  return from_entries(rows_, cols_ + rhs.cols_, std::move(e));
}

std::string to_coordinate_text(const SparseMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (const Entry& x : m.entries()) os << x.row + 1 << ' ' << x.col + 1 << ' ' << x.value << '\n';
  return os.str();
}

SparseMatrix from_coordinate_text(std::istream& in) {
  int rows = 0, cols = 0;
  std::size_t nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw Error(ErrorKind::ParseError, "matrix header");
  std::vector<Entry> e(nnz);
  for (Entry& x : e) {
    if (!(in >> x.row >> x.col >> x.value)) throw Error(ErrorKind::ParseError, "truncated matrix");
    --x.row;
    --x.col;
  }
  return SparseMatrix::from_entries(rows, cols, std::move(e));
}

}  // namespace ogc
