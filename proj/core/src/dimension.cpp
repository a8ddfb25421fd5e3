#include "scaling/dimension.hpp"

#include <ostream>

namespace scaling {

std::string_view base_symbol(BaseDim d) noexcept {
  switch (d) {
    case BaseDim::Mass: return "M";
    case BaseDim::Length: return "L";
    case BaseDim::Time: return "T";
    case BaseDim::Temperature: return "Theta";
    case BaseDim::Currency: return "Cur";
  }
  return "?";
}

Dimension Dimension::base(BaseDim d, Rational exponent) {
  Dimension out;
  out[d] = exponent;
  return out;
}

bool Dimension::is_dimensionless() const noexcept {
  for (const auto& e : exps_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Dimension Dimension::operator*(const Dimension& rhs) const { return dim_combine(*this, rhs, 1); }

Dimension Dimension::operator/(const Dimension& rhs) const { return dim_combine(*this, rhs, -1); }

Dimension Dimension::pow(const Rational& p) const { return dim_combine(Dimension{}, *this, p); }

std::string Dimension::str() const {
  std::string out;
  for (BaseDim d : kBaseDims) {
    const Rational& e = (*this)[d];
    if (e.is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += base_symbol(d);
    if (e != Rational(1)) out += "^" + e.str();
  }
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Dimension& d) { return os << d.str(); }

Dimension dim_combine(const Dimension& a, const Dimension& b, const Rational& exponent_on_b) {
  Dimension out = a;
  for (BaseDim d : kBaseDims) out[d] += exponent_on_b * b[d];
  return out;
}

Dimension dim(Rational mass, Rational length, Rational time, Rational temperature, Rational currency) {
  Dimension out;
  out[BaseDim::Mass] = mass;
  out[BaseDim::Length] = length;
  out[BaseDim::Time] = time;
  out[BaseDim::Temperature] = temperature;
  out[BaseDim::Currency] = currency;
  return out;
}

}  // namespace scaling
