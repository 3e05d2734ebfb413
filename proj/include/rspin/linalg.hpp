#pragma once

#include <cstddef>
#include <vector>

#include "rspin/field.hpp"

namespace rspin {

/// Incremental row echelon form over F_p. Rows are dense coefficient vectors.
class RowEchelon {
 public:
  RowEchelon(Field field, std::size_t columns);

  /// Adds a row; returns true iff it was independent of the rows seen so far.
  bool insert(std::vector<Coeff> row);
  /// True iff the row lies in the span of the inserted rows.
  bool contains(std::vector<Coeff> row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  /// Reduces `row` against the stored pivots in place.
  void reduce(std::vector<Coeff>& row) const;

  Field field_;
  std::size_t columns_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rspin
