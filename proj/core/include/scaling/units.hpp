#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "scaling/dimension.hpp"
#include "scaling/rational.hpp"

namespace scaling {

/// A named unit: `scale` converts one of it to the coherent SI unit of its
/// dimension (kg, m, s, K, GBP and their products).
struct Unit {
  std::string symbol;
  Dimension dimension;
  double scale = 1.0;

  // Coherent unit of a dimension with a synthesized symbol, e.g. "kg m^2 s^-2".
  static Unit coherent(const Dimension& d);

  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Symbol table of units. Built once, read-only afterwards.
class UnitRegistry {
public:
  UnitRegistry() = default;

  // Throws Error on duplicate symbol or non-positive/non-finite scale.
  void add(Unit unit);
  // Adds `symbol` defined as `factor` times the unit expression `definition`.
  void define(std::string symbol, double factor, std::string_view definition);

  const Unit* find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol) != nullptr; }
  std::size_t size() const noexcept { return units_.size(); }

  /// Parses a unit expression: `unit := symbol ('^' rational)? (' ' unit)*`.
  /// An expression consisting of one bare symbol yields the registered unit
  /// unchanged; anything else yields a composite whose symbol is the
  /// canonical spelling of the expression. Empty text is dimensionless.
  Unit parse_unit(std::string_view expression) const;

private:
  std::map<std::string, Unit, std::less<>> units_;
};

/// The stock registry: g, kg, m, ft, s, hr, yr, knot, mph, m/s, W, GBP and a
/// handful of companions (J, N, Pa, K, km, cm, mm, min, day, lb, mi).
const UnitRegistry& default_registry();

/// Real magnitude bound to a unit. The magnitude is always finite.
class Quantity {
public:
  Quantity(double magnitude, Unit unit);

  double magnitude() const noexcept { return magnitude_; }
  const Unit& unit() const noexcept { return unit_; }
  const Dimension& dimension() const noexcept { return unit_.dimension; }
  // Magnitude expressed in the coherent SI unit.
  double si() const noexcept { return magnitude_ * unit_.scale; }

  bool commensurable(const Quantity& other) const { return dimension() == other.dimension(); }

  // Products, quotients and powers land in coherent SI units.
  Quantity operator*(const Quantity& rhs) const;
  Quantity operator/(const Quantity& rhs) const;
  Quantity operator*(double factor) const;
  Quantity pow(const Rational& p) const;

  // "3.44864 m s^-1"
  std::string str() const;

private:
  double magnitude_;
  Unit unit_;
};

std::ostream& operator<<(std::ostream& os, const Quantity& q);

/// "<number> <unit-expression>", e.g. "9.80665 m s^-2".
Quantity parse_quantity(std::string_view text, const UnitRegistry& registry = default_registry());

/// Rescales q into `target`. Throws DimensionMismatch naming both dimensions.
Quantity convert(const Quantity& q, const Unit& target);

/// Natural log of the dimensionless ratio q/reference. This is the only
/// logarithm of a dimensionful value the library exposes.
double log_ratio(const Quantity& q, const Quantity& reference);

/// log_ratio against one unit of `reference`.
double log_ratio(const Quantity& q, const Unit& reference);

// Throws DimensionMismatch unless `actual` equals `expected`.
void require_dimension(const Dimension& actual, const Dimension& expected, std::string_view what);

}  // namespace scaling
