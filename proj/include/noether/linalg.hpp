#pragma once

// Exact row reduction over F_p.

#include <cstdint>
#include <vector>

#include "noether/field.hpp"

namespace noether {

using Row = std::vector<uint32_t>;

/// An incrementally maintained reduced row echelon basis. Rows are kept
/// sorted by pivot column; every pivot is 1 and is the only non-zero entry
/// of its column.
class RowSpace {
 public:
  RowSpace(const FieldSpec& field, int cols) : field_(field), cols_(cols), pivot_row_(cols, -1) {}

  /// Adds `row` to the span; returns true if the rank grew.
  bool insert(Row row);
  bool contains(Row row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool full() const { return rank() == cols_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<int> pivots() const;
  std::vector<int> non_pivots() const;

 private:
  void reduce(Row& row) const;

  FieldSpec field_;
  int cols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_;   // pivot column of rows_[i]
  std::vector<int> pivot_row_;  // column -> row index or -1
};

/// Rank by plain Gaussian elimination on a copy; an independent route used
/// to cross-check RowSpace.
int dense_rank(const FieldSpec& field, std::vector<Row> rows, int cols);

}  // namespace noether
