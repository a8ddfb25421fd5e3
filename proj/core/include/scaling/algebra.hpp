#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scaling/dimension.hpp"
#include "scaling/rational.hpp"

namespace scaling {

struct NamedDimension {
  std::string name;
  Dimension dimension;
};

using NamedDimensions = std::vector<NamedDimension>;

/// Dimension matrix: one column per quantity (input order kept), one row per
/// base dimension, entries the exact exponents.
class DimMatrix {
public:
  explicit DimMatrix(NamedDimensions columns);

  std::size_t rows() const noexcept { return kBaseDimCount; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Rational& at(std::size_t row, std::size_t col) const;
  const NamedDimensions& columns() const noexcept { return columns_; }

  std::size_t rank() const;

  /// Integer basis of the null space, one vector per free column, free
  /// columns taken in input order.
  std::vector<std::vector<Rational>> null_space() const;

private:
  NamedDimensions columns_;
};

/// Product of monomial terms in first-appearance order; names are unique.
class Monomial {
public:
  using Term = std::pair<std::string, Rational>;

  Monomial() = default;
  Monomial(std::initializer_list<Term> terms);
  explicit Monomial(std::vector<Term> terms);

  // "l^2 v^2"; "1" for the empty product. Exponent syntax as in unit expressions.
  static Monomial parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  // Zero when the name is absent.
  Rational exponent(std::string_view name) const;
  bool contains(std::string_view name) const;

  // Accumulates exponent onto name, appending if new and dropping it at zero.
  void multiply(const std::string& name, const Rational& exponent);

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Term> terms_;
};

/// Monomial law `target ~ prod name_i^a_i`. Prefactors are never stored.
class ScalingRelation {
public:
  // Throws RelationError when target appears among the terms, except for the
  // identity relation x ~ x.
  ScalingRelation(std::string target, Monomial terms);

  static ScalingRelation identity(const std::string& name);
  // "v ~ l^1/2"
  static ScalingRelation parse(std::string_view text);

  const std::string& target() const noexcept { return target_; }
  const Monomial& terms() const noexcept { return terms_; }
  Rational exponent(std::string_view name) const { return terms_.exponent(name); }
  bool is_identity() const;

  // "v ~ g^1/2 l^1/2"
  std::string str() const;

  friend bool operator==(const ScalingRelation&, const ScalingRelation&) = default;

private:
  std::string target_;
  Monomial terms_;
};

std::ostream& operator<<(std::ostream& os, const ScalingRelation& r);

/// Dimensionless product of the named quantities.
struct PiGroup {
  std::vector<std::string> names;
  std::vector<Rational> exponents;  // aligned with names

  // "pi: E t^2 rho^-1 r^-5"; zero exponents are skipped.
  std::string str() const;

  friend bool operator==(const PiGroup&, const PiGroup&) = default;
};

/// Net dimension of prod dim_i^a_i.
Dimension monomial_dimension(const NamedDimensions& quantities, const std::vector<Rational>& exponents);

/// The unique exponent vector a with target = sum a_i dim(param_i).
/// Throws Inconsistent when no combination reaches the target, Underdetermined
/// (carrying the surplus group count) when the parameters are dependent.
ScalingRelation solve_target_exponents(const NamedDimension& target, const NamedDimensions& params);

/// Basis of dimensionless groups, size n - rank. Each group is the smallest
/// integer exponent vector with gcd 1 and its first nonzero entry positive.
std::vector<PiGroup> pi_basis(const NamedDimensions& quantities);

/// Moves everything in lhs ~ rhs to one side and isolates solve_for.
ScalingRelation solve_balance(const Monomial& lhs, const Monomial& rhs, const std::string& solve_for);

/// Substitutes inner (target ~ ...) into outer, wherever outer uses inner's target.
ScalingRelation chain(const ScalingRelation& outer, const ScalingRelation& inner);

/// Strict lower < beta < upper. Requires lower < upper.
bool check_exponent_bound(const Rational& beta, const Rational& lower, const Rational& upper);
bool check_exponent_bound(double beta, const Rational& lower, const Rational& upper);

}  // namespace scaling
