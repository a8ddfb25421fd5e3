#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scaling {

// Root of every error this library reports. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bounded-integer rational arithmetic ran out of room.
class CapacityError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class UnknownUnit : public ParseError {
public:
  explicit UnknownUnit(std::string symbol)
      : ParseError("unknown unit symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
  const std::string& symbol() const noexcept { return symbol_; }

private:
  std::string symbol_;
};

// Logarithm requested of a non-positive ratio.
class DomainError : public Error {
public:
  using Error::Error;
};

// Target dimension lies outside the span of the parameters.
class Inconsistent : public Error {
public:
  using Error::Error;
};

// Parameter dimensions are rationally dependent; free_directions equals the
// number of surplus dimensionless groups.
class Underdetermined : public Error {
public:
  Underdetermined(const std::string& what, std::size_t free_directions)
      : Error(what), free_directions_(free_directions) {}
  std::size_t free_directions() const noexcept { return free_directions_; }

private:
  std::size_t free_directions_;
};

// Monomial balance or substitution that cannot be carried out.
class RelationError : public Error {
public:
  using Error::Error;
};

// Bad or insufficient data handed to a fit, loader or plot.
class DataError : public Error {
public:
  using Error::Error;
};

class CollinearDesign : public DataError {
public:
  CollinearDesign(const std::string& what, std::vector<std::string> columns)
      : DataError(what), columns_(std::move(columns)) {}
  const std::vector<std::string>& columns() const noexcept { return columns_; }

private:
  std::vector<std::string> columns_;
};

}  // namespace scaling
