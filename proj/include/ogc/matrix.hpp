#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ogc {

struct Entry {
  int row;
  int col;
  std::int64_t value;

  bool operator==(const Entry&) const = default;
};

/// Integer sparse matrix. Entries are kept sorted by (col, row), without
/// duplicates or zeros, so equality is structural.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  /// Sums duplicates and drops zeros.
  static SparseMatrix from_entries(int rows, int cols, std::vector<Entry> entries);
  static SparseMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix scaled(std::int64_t c) const;

  /// Columns `cols` of the matrix, in the given order.
  SparseMatrix select_cols(const std::vector<int>& cols) const;
  SparseMatrix select_rows(const std::vector<int>& rows) const;
  /// [this | rhs]
  SparseMatrix hconcat(const SparseMatrix& rhs) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

/// Coordinate text format: `rows cols nnz` then `i j value`, 1-based.
std::string to_coordinate_text(const SparseMatrix& m);
SparseMatrix from_coordinate_text(std::istream& in);

}  // namespace ogc
