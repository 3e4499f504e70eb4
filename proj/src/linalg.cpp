#include "noether/linalg.hpp"

#include <algorithm>

#include "noether/error.hpp"

namespace noether {

void RowSpace::reduce(Row& row) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivot_of_[i];
    const uint32_t f = row[c];
    if (f == 0) continue;
    const Row& r = rows_[i];
    const uint32_t nf = field_.neg(f);
    for (int k = c; k < cols_; ++k) {
      if (r[k]) row[k] = field_.add(row[k], field_.mul(nf, r[k]));
    }
  }
}

bool RowSpace::insert(Row row) {
  if (static_cast<int>(row.size()) != cols_) throw DomainError("row length mismatch");
  if (full()) return false;
  reduce(row);
  int lead = -1;
  for (int k = 0; k < cols_; ++k) {
    if (row[k]) {
      lead = k;
      break;
    }
  }
  if (lead < 0) return false;
  const uint32_t inv = field_.inv(row[lead]);
  for (int k = lead; k < cols_; ++k) {
    if (row[k]) row[k] = field_.mul(row[k], inv);
  }
  // clear the new pivot column from the existing rows
  for (size_t i = 0; i < rows_.size(); ++i) {
    const uint32_t f = rows_[i][lead];
    if (f == 0) continue;
    const uint32_t nf = field_.neg(f);
    for (int k = lead; k < cols_; ++k) {
      if (row[k]) rows_[i][k] = field_.add(rows_[i][k], field_.mul(nf, row[k]));
    }
  }
  auto pos = std::lower_bound(pivot_of_.begin(), pivot_of_.end(), lead) - pivot_of_.begin();
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivot_of_.insert(pivot_of_.begin() + pos, lead);
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (size_t i = 0; i < pivot_of_.size(); ++i) pivot_row_[pivot_of_[i]] = static_cast<int>(i);
  return true;
}

bool RowSpace::contains(Row row) const {
  if (static_cast<int>(row.size()) != cols_) throw DomainError("row length mismatch");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](uint32_t x) { return x == 0; });
}

std::vector<int> RowSpace::pivots() const { return pivot_of_; }

std::vector<int> RowSpace::non_pivots() const {
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

int dense_rank(const FieldSpec& field, std::vector<Row> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][c]) {
        sel = static_cast<int>(i);
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    const uint32_t inv = field.inv(rows[rank][c]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (!rows[i][c]) continue;
      const uint32_t f = field.mul(rows[i][c], inv);
      for (int k = c; k < cols; ++k) {
        rows[i][k] = field.sub(rows[i][k], field.mul(f, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace noether
