#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "scaling/dataset.hpp"
#include "scaling/units.hpp"

namespace scaling {

/// Column header `name[unit]`. The unit may be any unit expression.
struct CsvColumnSpec {
  std::string name;
  std::string unit_expression;
};

using CsvSchema = std::vector<CsvColumnSpec>;

// Splits and validates a header line. Throws DataError.
CsvSchema parse_csv_header(std::string_view line);

/// Comma-separated text with a `name[unit]` header. Lines whose first
/// non-blank character is '#' and blank lines are ignored anywhere.
DataSet parse_csv(std::string_view text, const UnitRegistry& registry = default_registry());
DataSet load_csv(const std::filesystem::path& path, const UnitRegistry& registry = default_registry());

/// Canonical text form: header `name[symbol]`, shortest round-trip numbers.
std::string write_csv(const DataSet& ds);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace scaling
