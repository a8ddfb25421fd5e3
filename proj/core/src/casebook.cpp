#include "scaling/casebook.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

const Dimension kMass = dim(1);
const Dimension kLength = dim(0, 1);
const Dimension kTime = dim(0, 0, 1);
const Dimension kSpeed = dim(0, 1, -1);
const Dimension kAcceleration = dim(0, 1, -2);
const Dimension kEnergy = dim(1, 2, -2);
const Dimension kDensity = dim(1, -3);
const Dimension kDiffusivity = dim(0, 2, -1);

const Unit& registered(std::string_view symbol) { return *default_registry().find(symbol); }

// Hard-coded exponents must agree with a fresh derivation; a mismatch is a bug.
void confirm(const ScalingRelation& derived, const ScalingRelation& expected) {
  if (!(derived == expected)) {
    throw std::logic_error(fmt::format("formula drift: derived '{}' but the case uses '{}'", derived.str(),
                                       expected.str()));
  }
}

ScalingRelation blast_relation() {
  const ScalingRelation hard_coded("r", Monomial{{"E", Rational(1, 5)}, {"rho", Rational(-1, 5)}, {"t", Rational(2, 5)}});
  confirm(solve_target_exponents({"r", kLength}, {{"E", kEnergy}, {"rho", kDensity}, {"t", kTime}}), hard_coded);
  return hard_coded;
}

ScalingRelation roast_relation() {
  // t ~ kappa^-1 l^2, then l ~ m^1/3 for similar birds.
  const ScalingRelation by_length("t", Monomial{{"kappa", -1}, {"l", 2}});
  confirm(solve_target_exponents({"t", kTime}, {{"kappa", kDiffusivity}, {"l", kLength}}), by_length);
  const ScalingRelation by_mass = chain(by_length, solve_balance(Monomial{{"m", 1}}, Monomial{{"l", 3}}, "l"));
  confirm(by_mass, ScalingRelation("t", Monomial{{"kappa", -1}, {"m", Rational(2, 3)}}));
  return by_mass;
}

ScalingRelation hull_relation() {
  const ScalingRelation hard_coded("v", Monomial{{"g", Rational(1, 2)}, {"l", Rational(1, 2)}});
  confirm(solve_target_exponents({"v", kSpeed}, {{"g", kAcceleration}, {"l", kLength}}), hard_coded);
  return hard_coded;
}

ScalingRelation fall_relation() {
  const ScalingRelation by_length = solve_balance(Monomial{{"l", 2}, {"v", 2}}, Monomial{{"l", 3}}, "v");
  confirm(by_length, ScalingRelation("v", Monomial{{"l", Rational(1, 2)}}));
  const ScalingRelation by_mass = chain(by_length, solve_balance(Monomial{{"m", 1}}, Monomial{{"l", 3}}, "l"));
  confirm(by_mass, ScalingRelation("v", Monomial{{"m", Rational(1, 6)}}));
  return by_mass;
}

void require_positive(const Quantity& q, std::string_view name) {
  if (!(q.magnitude() > 0.0)) throw DomainError(fmt::format("{} must be positive, got {}", name, q.str()));
}

// (a / b) as a pure number; a and b must be commensurable.
double ratio(const Quantity& a, const Quantity& b, std::string_view what) {
  require_dimension(a.dimension(), b.dimension(), what);
  return a.si() / b.si();
}

}  // namespace

Quantity standard_gravity() { return {9.80665, Unit::coherent(kAcceleration)}; }

void BlastConfig::validate() const {
  if (!(C > 0.0) || !std::isfinite(C)) throw DomainError(fmt::format("blast constant C must be positive, got {}", C));
  require_dimension(rho.dimension(), kDensity, "air density");
  require_positive(rho, "air density");
}

// ------------------------------------------------------------- CaseReport

CaseReport::CaseReport(std::string title, std::vector<NamedQuantity> inputs, ScalingRelation relation,
                       std::vector<std::pair<std::string, double>> prefactors, Quantity prediction,
                       std::optional<Unit> alternate_unit, std::string notes)
    : title_(std::move(title)),
      inputs_(std::move(inputs)),
      relation_(std::move(relation)),
      prefactors_(std::move(prefactors)),
      prediction_(std::move(prediction)),
      alternate_unit_(std::move(alternate_unit)),
      notes_(std::move(notes)) {}

CaseReport CaseReport::make(std::string title, std::vector<NamedQuantity> inputs, ScalingRelation relation,
                            std::vector<std::pair<std::string, double>> prefactors, Quantity prediction,
                            const Dimension& expected, std::optional<Unit> alternate_unit, std::string notes) {
  require_dimension(prediction.dimension(), expected, fmt::format("case '{}' prediction", title));
  if (alternate_unit) require_dimension(alternate_unit->dimension, expected, "alternate display unit");
  return {std::move(title), std::move(inputs),     std::move(relation),     std::move(prefactors),
          std::move(prediction), std::move(alternate_unit), std::move(notes)};
}

std::string CaseReport::render() const {
  std::string out = fmt::format("case: {}\n", title_);
  for (const auto& [name, q] : inputs_) out += fmt::format("input: {} = {}\n", name, q.str());
  out += fmt::format("relation: {}\n", relation_.str());
  for (const auto& [name, value] : prefactors_) out += fmt::format("prefactor: {} = {:.6g}\n", name, value);
  const Quantity si = convert(prediction_, Unit::coherent(prediction_.dimension()));
  out += fmt::format("prediction: {}", si.str());
  if (prediction_.unit().scale != 1.0) out += fmt::format(" = {}", prediction_.str());
  if (alternate_unit_ && alternate_unit_->scale != 1.0 && !(*alternate_unit_ == prediction_.unit())) {
    out += fmt::format(" = {}", convert(prediction_, *alternate_unit_).str());
  }
  out += '\n';
  if (!notes_.empty()) out += fmt::format("notes: {}\n", notes_);
  return out;
}

// ------------------------------------------------------------------ blast

Quantity blast_radius(const BlastConfig& cfg, const Quantity& energy, const Quantity& time) {
  blast_relation();
  cfg.validate();
  require_dimension(energy.dimension(), kEnergy, "blast energy");
  require_dimension(time.dimension(), kTime, "blast time");
  require_positive(energy, "blast energy");
  require_positive(time, "blast time");
  const Quantity r = (energy * time.pow(2) / cfg.rho).pow(Rational(1, 5)) * cfg.C;
  require_dimension(r.dimension(), kLength, "blast radius");
  return convert(r, registered("m"));
}

CaseReport blast_radius_case(const BlastConfig& cfg, const Quantity& energy, const Quantity& time) {
  const Quantity r = blast_radius(cfg, energy, time);
  const double k = ((energy / cfg.rho).pow(Rational(1, 5)) * cfg.C).si();
  return CaseReport::make("blast radius", {{"E", energy}, {"t", time}, {"rho", cfg.rho}}, blast_relation(),
                          {{"C", cfg.C}, {"K = C (E/rho)^1/5 [m s^-2/5]", k}}, r, kLength, registered("ft"),
                          "r = C (E t^2 / rho)^1/5");
}

Quantity blast_yield(const BlastConfig& cfg, const std::vector<BlastObservation>& observations) {
  blast_relation();
  cfg.validate();
  if (observations.empty()) throw DataError("blast_yield needs at least one (r, t) observation");
  const Unit& joule = registered("J");
  double log_sum = 0.0;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const auto& [r, t] = observations[i];
    require_dimension(r.dimension(), kLength, fmt::format("observation {} radius", i + 1));
    require_dimension(t.dimension(), kTime, fmt::format("observation {} time", i + 1));
    require_positive(r, "blast radius");
    require_positive(t, "blast time");
    const Quantity e = cfg.rho * r.pow(5) / t.pow(2) * (1.0 / std::pow(cfg.C, 5));
    require_dimension(e.dimension(), kEnergy, "blast yield");
    log_sum += log_ratio(e, joule);
  }
  return {std::exp(log_sum / static_cast<double>(observations.size())), joule};
}

CaseReport blast_yield_case(const BlastConfig& cfg, const std::vector<BlastObservation>& observations) {
  const Quantity e = blast_yield(cfg, observations);
  std::vector<NamedQuantity> inputs{{"rho", cfg.rho}};
  for (std::size_t i = 0; i < observations.size(); ++i) {
    inputs.emplace_back(fmt::format("r[{}]", i + 1), observations[i].radius);
    inputs.emplace_back(fmt::format("t[{}]", i + 1), observations[i].time);
  }
  return CaseReport::make("blast yield", std::move(inputs), blast_relation(), {{"C", cfg.C}}, e, kEnergy,
                          std::nullopt,
                          fmt::format("E = rho r^5 / (C^5 t^2), geometric mean over {} observation(s)",
                                      observations.size()));
}

// ---------------------------------------------------------------- roasting

Quantity roast_time(const Quantity& mass, const Quantity& ref_mass, const Quantity& ref_time) {
  roast_relation();
  require_dimension(mass.dimension(), kMass, "roast mass");
  require_dimension(ref_time.dimension(), kTime, "reference roasting time");
  require_positive(mass, "mass");
  require_positive(ref_mass, "reference mass");
  require_positive(ref_time, "reference time");
  const double scale = std::pow(ratio(mass, ref_mass, "mass against reference mass"), 2.0 / 3.0);
  return ref_time * scale;
}

CaseReport roast_time_case(const Quantity& mass, const Quantity& ref_mass, const Quantity& ref_time) {
  const Quantity t = roast_time(mass, ref_mass, ref_time);
  const double c_prime_ratio = ref_time.si() / std::pow(ref_mass.si(), 2.0 / 3.0);
  return CaseReport::make("roasting time", {{"m", mass}, {"m_ref", ref_mass}, {"t_ref", ref_time}},
                          roast_relation(), {{"C'/kappa = t_ref / m_ref^2/3 [s kg^-2/3]", c_prime_ratio}}, t, kTime,
                          std::nullopt, "t = t_ref (m / m_ref)^2/3 for similar birds at the same oven temperature");
}

// -------------------------------------------------------------------- hull

Quantity hull_speed(const Quantity& length) {
  hull_relation();
  require_dimension(length.dimension(), kLength, "waterline length");
  require_positive(length, "waterline length");
  const Quantity v = (standard_gravity() * length).pow(Rational(1, 2)) * (1.0 / std::sqrt(2.0 * std::numbers::pi));
  require_dimension(v.dimension(), kSpeed, "hull speed");
  return convert(v, registered("m/s"));
}

CaseReport hull_speed_case(const Quantity& length) {
  return CaseReport::make("hull speed", {{"l", length}, {"g", standard_gravity()}}, hull_relation(),
                          {{"1/sqrt(2 pi)", 1.0 / std::sqrt(2.0 * std::numbers::pi)}}, hull_speed(length), kSpeed,
                          registered("knot"), "bow-wave speed v = sqrt(g l / 2 pi)");
}

// ----------------------------------------------------------- falling bodies

Quantity terminal_velocity_scale(const Quantity& ref_speed, const Quantity& ref_mass, const Quantity& mass) {
  fall_relation();
  require_dimension(ref_speed.dimension(), kSpeed, "reference speed");
  require_dimension(mass.dimension(), kMass, "mass");
  require_positive(ref_speed, "reference speed");
  require_positive(ref_mass, "reference mass");
  require_positive(mass, "mass");
  return ref_speed * std::pow(ratio(mass, ref_mass, "mass against reference mass"), 1.0 / 6.0);
}

CaseReport terminal_velocity_case(const Quantity& ref_speed, const Quantity& ref_mass, const Quantity& mass) {
  return CaseReport::make("terminal velocity", {{"v_ref", ref_speed}, {"m_ref", ref_mass}, {"m", mass}},
                          fall_relation(), {}, terminal_velocity_scale(ref_speed, ref_mass, mass), kSpeed,
                          registered("m/s"), "drag l^2 v^2 balances weight l^3, with m ~ l^3");
}

// ----------------------------------------------------------------- Kleiber

ScalingRelation metabolic_chain(const Rational& mass_length_exponent) {
  const ScalingRelation surface("s", Monomial{{"l", 2}});
  const ScalingRelation length = solve_balance(Monomial{{"m", 1}}, Monomial{{"l", mass_length_exponent}}, "l");
  return chain(surface, length);
}

KleiberDerivations kleiber_chain_demo() { return {metabolic_chain(3), metabolic_chain(Rational(8, 3))}; }

}  // namespace scaling
