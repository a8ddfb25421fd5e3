#include "scaling/algebra.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

using IntRow = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntRow>;

// Divides a row by the gcd of its entries.
void normalize_row(IntRow& row) {
  std::int64_t g = 0;
  for (auto v : row) g = gcd64(g, v);
  if (g > 1) {
    for (auto& v : row) v /= g;
  }
}

IntRow to_integer_row(const std::vector<Rational>& row) {
  std::int64_t l = 1;
  for (const auto& r : row) l = lcm64(l, r.den());
  IntRow out;
  out.reserve(row.size());
  for (const auto& r : row) out.push_back(checked_mul(r.num(), l / r.den()));
  normalize_row(out);
  return out;
}

struct Echelon {
  IntMatrix rows;                    // reduced rows; rows past pivots.size() are zero
  std::vector<std::size_t> pivots;   // pivot column of row i
};

// Fraction-free Gauss-Jordan on an integer matrix. Pivot columns are chosen
// left to right and the first nonzero row below is used as the pivot, so the
// result depends only on column order.
Echelon reduce(IntMatrix m, std::size_t ncols) {
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    if (m[rank][col] < 0) {
      for (auto& v : m[rank]) v = checked_sub(0, v);
    }
    const std::int64_t p = m[rank][col];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const std::int64_t a = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        m[i][j] = checked_sub(checked_mul(p, m[i][j]), checked_mul(a, m[rank][j]));
      }
      normalize_row(m[i]);
    }
    e.pivots.push_back(col);
    ++rank;
  }
  e.rows = std::move(m);
  return e;
}

IntMatrix integer_matrix(const DimMatrix& dm) {
  IntMatrix m;
  for (std::size_t r = 0; r < dm.rows(); ++r) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < dm.cols(); ++c) row.push_back(dm.at(r, c));
    m.push_back(to_integer_row(row));
  }
  return m;
}

// Smallest integer vector with gcd 1 and first nonzero entry positive.
std::vector<Rational> normalize_group(const std::vector<Rational>& v) {
  IntRow ints = to_integer_row(v);
  const auto first = std::find_if(ints.begin(), ints.end(), [](auto x) { return x != 0; });
  if (first != ints.end() && *first < 0) {
    for (auto& x : ints) x = checked_sub(0, x);
  }
  return {ints.begin(), ints.end()};
}

void append_term(std::string& out, const std::string& name, const Rational& e) {
  if (!out.empty()) out += ' ';
  out += name;
  if (e != Rational(1)) out += "^" + e.str();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

// ---------------------------------------------------------------- DimMatrix

DimMatrix::DimMatrix(NamedDimensions columns) : columns_(std::move(columns)) {}

const Rational& DimMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) throw std::out_of_range("DimMatrix::at");
  return columns_[col].dimension[kBaseDims[row]];
}

std::size_t DimMatrix::rank() const {
  if (cols() == 0) return 0;
  return reduce(integer_matrix(*this), cols()).pivots.size();
}

std::vector<std::vector<Rational>> DimMatrix::null_space() const {
  const std::size_t n = cols();
  std::vector<std::vector<Rational>> basis;
  if (n == 0) return basis;
  const Echelon e = reduce(integer_matrix(*this), n);

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    // Row r reads p_r x_{pivot_r} + a_r x_free = 0 over the free column alone.
    std::int64_t scale = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.rows[r][free] != 0) scale = lcm64(scale, e.rows[r][e.pivots[r]]);
    }
    IntRow v(n, 0);
    v[free] = scale;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const std::int64_t p = e.rows[r][e.pivots[r]];
      v[e.pivots[r]] = checked_sub(0, checked_mul(e.rows[r][free], scale / p));
    }
    normalize_row(v);
    basis.emplace_back(v.begin(), v.end());
  }
  return basis;
}

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Term> terms) : Monomial(std::vector<Term>(terms)) {}

Monomial::Monomial(std::vector<Term> terms) {
  for (auto& [name, e] : terms) {
    if (contains(name)) throw RelationError(fmt::format("duplicate term '{}' in monomial", name));
    terms_.emplace_back(std::move(name), e);
  }
}

Monomial Monomial::parse(std::string_view text) {
  text = trim(text);
  Monomial out;
  if (text.empty() || text == "1") return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = std::min(text.find_first_of(" \t", pos), text.size());
    const auto token = text.substr(pos, end - pos);
    pos = text.find_first_not_of(" \t", end);
    if (pos == std::string_view::npos) pos = text.size();
    const auto caret = token.find('^');
    const std::string name(token.substr(0, caret));
    if (name.empty()) throw ParseError(fmt::format("missing name in monomial '{}'", text));
    const Rational e = caret == std::string_view::npos ? Rational(1) : Rational::parse(token.substr(caret + 1));
    if (out.contains(name)) throw ParseError(fmt::format("duplicate term '{}' in monomial '{}'", name, text));
    out.terms_.emplace_back(name, e);
  }
  return out;
}

Rational Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : terms_) {
    if (n == name) return e;
  }
  return 0;
}

bool Monomial::contains(std::string_view name) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first == name; });
}

void Monomial::multiply(const std::string& name, const Rational& exponent) {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first == name; });
  if (it == terms_.end()) {
    if (!exponent.is_zero()) terms_.emplace_back(name, exponent);
    return;
  }
  it->second += exponent;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string Monomial::str() const {
  std::string out;
  for (const auto& [name, e] : terms_) append_term(out, name, e);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------- ScalingRelation

ScalingRelation::ScalingRelation(std::string target, Monomial terms)
    : target_(std::move(target)), terms_(std::move(terms)) {
  if (target_.empty()) throw RelationError("relation target must be named");
  if (terms_.contains(target_) && !is_identity()) {
    throw RelationError(fmt::format("relation target '{}' appears among its own terms", target_));
  }
}

ScalingRelation ScalingRelation::identity(const std::string& name) { return {name, Monomial{{name, 1}}}; }

ScalingRelation ScalingRelation::parse(std::string_view text) {
  const auto tilde = text.find('~');
  if (tilde == std::string_view::npos) throw ParseError(fmt::format("relation '{}' lacks '~'", text));
  const std::string target(trim(text.substr(0, tilde)));
  return {target, Monomial::parse(text.substr(tilde + 1))};
}

bool ScalingRelation::is_identity() const {
  return terms_.terms().size() == 1 && terms_.terms().front().first == target_ &&
         terms_.terms().front().second == Rational(1);
}

std::string ScalingRelation::str() const { return target_ + " ~ " + terms_.str(); }

std::ostream& operator<<(std::ostream& os, const ScalingRelation& r) { return os << r.str(); }

std::string PiGroup::str() const {
  std::string body;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!exponents[i].is_zero()) append_term(body, names[i], exponents[i]);
  }
  return "pi: " + (body.empty() ? std::string("1") : body);
}

// --------------------------------------------------------------- operations

Dimension monomial_dimension(const NamedDimensions& quantities, const std::vector<Rational>& exponents) {
  if (quantities.size() != exponents.size()) throw std::invalid_argument("monomial_dimension: size mismatch");
  Dimension d;
  for (std::size_t i = 0; i < quantities.size(); ++i) d = dim_combine(d, quantities[i].dimension, exponents[i]);
  return d;
}

ScalingRelation solve_target_exponents(const NamedDimension& target, const NamedDimensions& params) {
  if (params.empty()) throw RelationError("solve_target_exponents needs at least one parameter");
  const std::size_t n = params.size();

  // Augmented [A | b] with b the target's exponents.
  IntMatrix m;
  for (BaseDim d : kBaseDims) {
    std::vector<Rational> row;
    for (const auto& p : params) row.push_back(p.dimension[d]);
    row.push_back(target.dimension[d]);
    m.push_back(to_integer_row(row));
  }
  const Echelon e = reduce(std::move(m), n + 1);
  const bool inconsistent = !e.pivots.empty() && e.pivots.back() == n;
  const std::size_t rank = e.pivots.size() - (inconsistent ? 1 : 0);

  if (inconsistent) {
    throw Inconsistent(fmt::format("dimensionally impossible: [{}] for '{}' is not a product of powers of the parameters",
                                   target.dimension.str(), target.name));
  }
  if (rank < n) {
    throw Underdetermined(
        fmt::format("underdetermined: '{}' admits {} free direction(s); the parameters form {} dimensionless group(s)",
                    target.name, n - rank, n - rank),
        n - rank);
  }

  std::vector<Rational> exps(n);
  for (std::size_t r = 0; r < rank; ++r) {
    exps[e.pivots[r]] = Rational(e.rows[r][n], e.rows[r][e.pivots[r]]);
  }
  if (monomial_dimension(params, exps) != target.dimension) {
    throw std::logic_error("solve_target_exponents: substitution check failed");
  }

  std::vector<Monomial::Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    if (params[i].name == target.name) throw RelationError(fmt::format("'{}' is both target and parameter", target.name));
    terms.emplace_back(params[i].name, exps[i]);
  }
  return {target.name, Monomial(std::move(terms))};
}

std::vector<PiGroup> pi_basis(const NamedDimensions& quantities) {
  const DimMatrix matrix(quantities);
  std::vector<std::string> names;
  for (const auto& q : quantities) names.push_back(q.name);

  std::vector<PiGroup> groups;
  for (const auto& v : matrix.null_space()) {
    PiGroup g{names, normalize_group(v)};
    if (!monomial_dimension(quantities, g.exponents).is_dimensionless()) {
      throw std::logic_error("pi_basis: group is not dimensionless");
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

ScalingRelation solve_balance(const Monomial& lhs, const Monomial& rhs, const std::string& solve_for) {
  if (!lhs.contains(solve_for) && !rhs.contains(solve_for)) {
    throw RelationError(fmt::format("'{}' does not appear in the balance", solve_for));
  }
  // lhs / rhs ~ 1
  Monomial net;
  for (const auto& [name, e] : lhs.terms()) net.multiply(name, e);
  for (const auto& [name, e] : rhs.terms()) net.multiply(name, -e);

  const Rational own = net.exponent(solve_for);
  if (own.is_zero()) {
    throw RelationError(fmt::format("cannot isolate '{}': its net exponent is zero", solve_for));
  }
  Monomial result;
  for (const auto& [name, e] : net.terms()) {
    if (name != solve_for) result.multiply(name, -e / own);
  }
  return {solve_for, std::move(result)};
}

ScalingRelation chain(const ScalingRelation& outer, const ScalingRelation& inner) {
  if (!outer.terms().contains(inner.target())) {
    throw RelationError(fmt::format("cannot chain: '{}' does not appear in '{}'", inner.target(), outer.str()));
  }
  Monomial result;
  for (const auto& [name, e] : outer.terms().terms()) {
    if (name == inner.target()) {
      for (const auto& [iname, ie] : inner.terms().terms()) result.multiply(iname, e * ie);
    } else {
      result.multiply(name, e);
    }
  }
  return {outer.target(), std::move(result)};
}

bool check_exponent_bound(const Rational& beta, const Rational& lower, const Rational& upper) {
  if (!(lower < upper)) throw Error("check_exponent_bound: lower bound must be below upper bound");
  return lower < beta && beta < upper;
}

bool check_exponent_bound(double beta, const Rational& lower, const Rational& upper) {
  if (!(lower < upper)) throw Error("check_exponent_bound: lower bound must be below upper bound");
  return lower.to_double() < beta && beta < upper.to_double();
}

}  // namespace scaling
