#include "rspin/linalg.hpp"

#include <algorithm>

namespace rspin {

RowEchelon::RowEchelon(Field field, std::size_t columns) : field_(field), columns_(columns) {}

void RowEchelon::reduce(std::vector<Coeff>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Coeff c = row[pivots_[k]];
    if (c == 0) continue;
    const std::vector<Coeff>& pivot_row = rows_[k];
    for (std::size_t col = 0; col < columns_; ++col) {
      if (pivot_row[col] != 0) row[col] = field_.sub(row[col], field_.mul(c, pivot_row[col]));
    }
  }
}

bool RowEchelon::insert(std::vector<Coeff> row) {
  if (row.size() != columns_) throw Error("RowEchelon: row has wrong length");
  reduce(row);
  const auto it = std::find_if(row.begin(), row.end(), [](Coeff c) { return c != 0; });
  if (it == row.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - row.begin());
  const Coeff scale = field_.inv(row[pivot]);
  for (Coeff& c : row) c = field_.mul(c, scale);
  // Keep stored rows fully reduced so reduce() needs a single pass.
  for (auto& other : rows_) {
    const Coeff c = other[pivot];
    if (c == 0) continue;
    for (std::size_t col = 0; col < columns_; ++col) {
      if (row[col] != 0) other[col] = field_.sub(other[col], field_.mul(c, row[col]));
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool RowEchelon::contains(std::vector<Coeff> row) const {
  if (row.size() != columns_) throw Error("RowEchelon: row has wrong length");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](Coeff c) { return c == 0; });
}

}  // namespace rspin
