#include "scaling/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

CsvSchema parse_csv_header(std::string_view line) {
  CsvSchema schema;
  for (const auto field : split(line, ',')) {
    const auto open = field.find('[');
    if (field.empty() || open == std::string_view::npos || field.back() != ']' || open == 0) {
      throw DataError(fmt::format("malformed header field '{}'; expected name[unit]", field));
    }
    CsvColumnSpec col{std::string(trim(field.substr(0, open))),
                      std::string(trim(field.substr(open + 1, field.size() - open - 2)))};
    if (col.name.empty()) throw DataError(fmt::format("missing column name in header field '{}'", field));
    for (const auto& prior : schema) {
      if (prior.name == col.name) throw DataError(fmt::format("duplicate column '{}' in header", col.name));
    }
    schema.push_back(std::move(col));
  }
  return schema;
}

DataSet parse_csv(std::string_view text, const UnitRegistry& registry) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    lines.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }

  std::size_t i = 0;
  while (i < lines.size() && skippable(lines[i])) ++i;
  if (i == lines.size()) throw DataError("missing header row");
  const CsvSchema schema = parse_csv_header(lines[i]);

  std::vector<Column> columns;
  for (const auto& spec : schema) {
    try {
      columns.push_back({spec.name, registry.parse_unit(spec.unit_expression), {}});
    } catch (const ParseError& e) {
      throw DataError(fmt::format("column '{}': {}", spec.name, e.what()));
    }
  }

  for (++i; i < lines.size(); ++i) {
    if (skippable(lines[i])) continue;
    const auto cells = split(lines[i], ',');
    if (cells.size() != schema.size()) {
      throw DataError(fmt::format("line {}: expected {} fields, found {}", i + 1, schema.size(), cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string_view cell = cells[c];
      if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw DataError(fmt::format("line {}: cannot parse '{}' in column '{}'", i + 1, cells[c], schema[c].name));
      }
      columns[c].values.push_back(v);
    }
  }
  if (columns.front().values.empty()) throw DataError("no data rows");
  return DataSet(std::move(columns));
}

DataSet load_csv(const std::filesystem::path& path, const UnitRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), registry);
}

std::string write_csv(const DataSet& ds) {
  std::string out;
  for (std::size_t c = 0; c < ds.cols(); ++c) {
    const auto& col = ds.columns()[c];
    out += fmt::format("{}{}[{}]", c == 0 ? "" : ",", col.name, col.unit.symbol);
  }
  out += '\n';
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    for (std::size_t c = 0; c < ds.cols(); ++c) out += fmt::format("{}{}", c == 0 ? "" : ",", ds.columns()[c].values[r]);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError(fmt::format("cannot write '{}'", tmp.string()));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw DataError(fmt::format("write to '{}' failed", tmp.string()));
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError(fmt::format("cannot rename '{}' to '{}': {}", tmp.string(), path.string(), ec.message()));
  }
}

}  // namespace scaling
