#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scaling/units.hpp"

namespace scaling {

struct Column {
  std::string name;
  Unit unit;
  std::vector<double> values;
};

/// Named columns of magnitudes, each bound to one unit. Immutable once built.
class DataSet {
public:
  DataSet() = default;
  // Throws DataError on duplicate names, ragged columns or non-finite values.
  explicit DataSet(std::vector<Column> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<Column>& columns() const noexcept { return columns_; }

  bool has(std::string_view name) const;
  // Throws DataError naming the missing column.
  const Column& column(std::string_view name) const;
  Quantity at(std::string_view name, std::size_t row) const;

private:
  std::vector<Column> columns_;
  std::size_t rows_ = 0;
};

}  // namespace scaling
