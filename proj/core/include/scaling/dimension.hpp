#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "scaling/rational.hpp"

namespace scaling {

enum class BaseDim : std::size_t { Mass = 0, Length, Time, Temperature, Currency };

inline constexpr std::size_t kBaseDimCount = 5;
inline constexpr std::array<BaseDim, kBaseDimCount> kBaseDims = {
    BaseDim::Mass, BaseDim::Length, BaseDim::Time, BaseDim::Temperature, BaseDim::Currency};

// Short symbol used when printing dimensions: M, L, T, Theta, Cur.
std::string_view base_symbol(BaseDim d) noexcept;

/// Vector of exact rational exponents over the fixed base-dimension set.
/// The zero vector is the unique dimensionless value.
class Dimension {
public:
  Dimension() = default;

  static Dimension base(BaseDim d, Rational exponent = 1);
  static Dimension dimensionless() { return {}; }

  const Rational& operator[](BaseDim d) const noexcept { return exps_[static_cast<std::size_t>(d)]; }
  Rational& operator[](BaseDim d) noexcept { return exps_[static_cast<std::size_t>(d)]; }

  bool is_dimensionless() const noexcept;

  Dimension operator*(const Dimension& rhs) const;  // exponents add
  Dimension operator/(const Dimension& rhs) const;  // exponents subtract
  Dimension pow(const Rational& p) const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

  // "M L^2 T^-2"; "1" when dimensionless.
  std::string str() const;

private:
  std::array<Rational, kBaseDimCount> exps_{};
};

std::ostream& operator<<(std::ostream& os, const Dimension& d);

/// a + exponent_on_b * b, component-wise and exact.
Dimension dim_combine(const Dimension& a, const Dimension& b, const Rational& exponent_on_b);

/// Shorthand for building dimensions in code: dim(1, 2, -2) is M L^2 T^-2.
Dimension dim(Rational mass, Rational length = 0, Rational time = 0, Rational temperature = 0,
              Rational currency = 0);

}  // namespace scaling
