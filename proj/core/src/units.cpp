#include "scaling/units.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <utility>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

constexpr std::string_view kWhitespace = " \t";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kWhitespace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kWhitespace);
  return s.substr(b, e - b + 1);
}

std::string_view coherent_symbol(BaseDim d) {
  switch (d) {
    case BaseDim::Mass: return "kg";
    case BaseDim::Length: return "m";
    case BaseDim::Time: return "s";
    case BaseDim::Temperature: return "K";
    case BaseDim::Currency: return "GBP";
  }
  return "?";
}

UnitRegistry build_default_registry() {
  UnitRegistry r;
  r.add({"kg", dim(1), 1.0});
  r.add({"m", dim(0, 1), 1.0});
  r.add({"s", dim(0, 0, 1), 1.0});
  r.add({"K", dim(0, 0, 0, 1), 1.0});
  r.add({"GBP", dim(0, 0, 0, 0, 1), 1.0});

  r.define("g", 1e-3, "kg");
  r.define("lb", 0.45359237, "kg");
  r.define("km", 1000.0, "m");
  r.define("cm", 0.01, "m");
  r.define("mm", 0.001, "m");
  r.define("ft", 0.3048, "m");
  r.define("mi", 1609.344, "m");
  r.define("min", 60.0, "s");
  r.define("hr", 3600.0, "s");
  r.define("day", 86400.0, "s");
  r.define("yr", 3.1557e7, "s");
  r.define("m/s", 1.0, "m s^-1");
  r.define("knot", 1852.0 / 3600.0, "m s^-1");
  r.define("mph", 1609.344 / 3600.0, "m s^-1");
  r.define("N", 1.0, "kg m s^-2");
  r.define("J", 1.0, "kg m^2 s^-2");
  r.define("W", 1.0, "kg m^2 s^-3");
  r.define("Pa", 1.0, "kg m^-1 s^-2");
  return r;
}

}  // namespace

Unit Unit::coherent(const Dimension& d) {
  std::string symbol;
  for (BaseDim b : kBaseDims) {
    const Rational& e = d[b];
    if (e.is_zero()) continue;
    if (!symbol.empty()) symbol += ' ';
    symbol += coherent_symbol(b);
    if (e != Rational(1)) symbol += "^" + e.str();
  }
  return Unit{symbol, d, 1.0};
}

void UnitRegistry::add(Unit unit) {
  if (unit.symbol.empty() || unit.symbol.find_first_of(" \t^") != std::string::npos) {
    throw Error(fmt::format("invalid unit symbol '{}'", unit.symbol));
  }
  if (!(unit.scale > 0.0) || !std::isfinite(unit.scale)) {
    throw Error(fmt::format("unit '{}' must have a positive finite scale", unit.symbol));
  }
  if (contains(unit.symbol)) throw Error(fmt::format("duplicate unit symbol '{}'", unit.symbol));
  std::string key = unit.symbol;
  units_.emplace(std::move(key), std::move(unit));
}

void UnitRegistry::define(std::string symbol, double factor, std::string_view definition) {
  const Unit base = parse_unit(definition);
  add(Unit{std::move(symbol), base.dimension, factor * base.scale});
}

const Unit* UnitRegistry::find(std::string_view symbol) const {
  const auto it = units_.find(symbol);
  return it == units_.end() ? nullptr : &it->second;
}

Unit UnitRegistry::parse_unit(std::string_view expression) const {
  expression = trim(expression);
  Unit out{"", Dimension{}, 1.0};
  std::size_t factors = 0;
  const Unit* only = nullptr;
  bool only_plain = false;

  std::size_t pos = 0;
  while (pos < expression.size()) {
    const auto end = std::min(expression.find_first_of(kWhitespace, pos), expression.size());
    const std::string_view token = expression.substr(pos, end - pos);
    pos = expression.find_first_not_of(kWhitespace, end);
    if (pos == std::string_view::npos) pos = expression.size();

    const auto caret = token.find('^');
    const std::string_view symbol = token.substr(0, caret);
    Rational exponent = 1;
    if (caret != std::string_view::npos) {
      const std::string_view exp_text = token.substr(caret + 1);
      try {
        exponent = Rational::parse(exp_text);
      } catch (const CapacityError&) {
        throw;
      } catch (const Error&) {
        throw ParseError(fmt::format("malformed exponent '{}' in unit '{}'", exp_text, expression));
      }
    }
    if (symbol.empty()) throw ParseError(fmt::format("missing unit symbol in '{}'", expression));
    const Unit* unit = find(symbol);
    if (unit == nullptr) throw UnknownUnit(std::string(symbol));

    ++factors;
    only = unit;
    only_plain = caret == std::string_view::npos;
    out.dimension = dim_combine(out.dimension, unit->dimension, exponent);
    out.scale *= std::pow(unit->scale, exponent.to_double());
    if (!out.symbol.empty()) out.symbol += ' ';
    out.symbol += symbol;
    if (exponent != Rational(1)) out.symbol += "^" + exponent.str();
  }
  if (factors == 1 && only_plain) return *only;
  return out;
}

const UnitRegistry& default_registry() {
  static const UnitRegistry registry = build_default_registry();
  return registry;
}

Quantity::Quantity(double magnitude, Unit unit) : magnitude_(magnitude), unit_(std::move(unit)) {
  if (!std::isfinite(magnitude_)) {
    throw DomainError(fmt::format("non-finite magnitude for unit '{}'", unit_.symbol));
  }
}

Quantity Quantity::operator*(const Quantity& rhs) const {
  const Dimension d = dimension() * rhs.dimension();
  return {si() * rhs.si(), Unit::coherent(d)};
}

Quantity Quantity::operator/(const Quantity& rhs) const {
  if (rhs.magnitude_ == 0.0) throw DomainError("division by a zero quantity");
  const Dimension d = dimension() / rhs.dimension();
  return {si() / rhs.si(), Unit::coherent(d)};
}

Quantity Quantity::operator*(double factor) const { return {magnitude_ * factor, unit_}; }

Quantity Quantity::pow(const Rational& p) const {
  if (!p.is_integer() && si() < 0.0) throw DomainError("fractional power of a negative quantity");
  return {std::pow(si(), p.to_double()), Unit::coherent(dimension().pow(p))};
}

std::string Quantity::str() const {
  if (unit_.symbol.empty()) return fmt::format("{:.6g}", magnitude_);
  return fmt::format("{:.6g} {}", magnitude_, unit_.symbol);
}

std::ostream& operator<<(std::ostream& os, const Quantity& q) { return os << q.str(); }

Quantity parse_quantity(std::string_view text, const UnitRegistry& registry) {
  const std::string_view body = trim(text);
  const auto split = std::min(body.find_first_of(kWhitespace), body.size());
  std::string_view number = body.substr(0, split);
  if (!number.empty() && number.front() == '+') number.remove_prefix(1);
  double magnitude = 0.0;
  const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), magnitude);
  if (number.empty() || ec != std::errc() || ptr != number.data() + number.size()) {
    throw ParseError(fmt::format("malformed number in quantity '{}'", text));
  }
  if (!std::isfinite(magnitude)) throw ParseError(fmt::format("non-finite number in '{}'", text));
  return {magnitude, registry.parse_unit(body.substr(split))};
}

void require_dimension(const Dimension& actual, const Dimension& expected, std::string_view what) {
  if (actual != expected) {
    throw DimensionMismatch(
        fmt::format("{}: dimension mismatch, got [{}] but expected [{}]", what, actual.str(), expected.str()));
  }
}

Quantity convert(const Quantity& q, const Unit& target) {
  require_dimension(q.dimension(), target.dimension, fmt::format("convert to '{}'", target.symbol));
  return {q.magnitude() * q.unit().scale / target.scale, target};
}

double log_ratio(const Quantity& q, const Quantity& reference) {
  if (!q.commensurable(reference)) {
    throw DimensionMismatch(fmt::format("log_ratio: cannot take log of [{}] / [{}]",
                                        q.dimension().str(), reference.dimension().str()));
  }
  const double ratio = q.si() / reference.si();
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw DomainError(fmt::format("log_ratio: ratio {} / {} is not strictly positive", q.str(), reference.str()));
  }
  return std::log(ratio);
}

double log_ratio(const Quantity& q, const Unit& reference) { return log_ratio(q, Quantity(1.0, reference)); }

}  // namespace scaling
