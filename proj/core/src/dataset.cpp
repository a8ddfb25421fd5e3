#include "scaling/dataset.hpp"

#include <cmath>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

DataSet::DataSet(std::vector<Column> columns) : columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const Column& c = columns_[i];
    if (c.name.empty()) throw DataError(fmt::format("column {} has no name", i + 1));
    for (std::size_t j = 0; j < i; ++j) {
      if (columns_[j].name == c.name) throw DataError(fmt::format("duplicate column '{}'", c.name));
    }
    if (i == 0) rows_ = c.values.size();
    if (c.values.size() != rows_) {
      throw DataError(fmt::format("column '{}' has {} rows, expected {}", c.name, c.values.size(), rows_));
    }
    for (std::size_t r = 0; r < c.values.size(); ++r) {
      if (!std::isfinite(c.values[r])) {
        throw DataError(fmt::format("non-finite value in column '{}' row {}", c.name, r + 1));
      }
    }
  }
}

bool DataSet::has(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return true;
  }
  return false;
}

const Column& DataSet::column(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return c;
  }
  throw DataError(fmt::format("no column named '{}'", name));
}

Quantity DataSet::at(std::string_view name, std::size_t row) const {
  const Column& c = column(name);
  if (row >= rows_) throw DataError(fmt::format("row {} out of range (n={})", row + 1, rows_));
  return {c.values[row], c.unit};
}

}  // namespace scaling
