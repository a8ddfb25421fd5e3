#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scaling/algebra.hpp"
#include "scaling/units.hpp"

namespace scaling {

/// Standard gravity, used wherever a case needs g.
Quantity standard_gravity();

struct BlastConfig {
  // Dimensionless blast-wave constant. No canonical value exists; 1.0 is a placeholder
  // and every report prints the one used.
  double C = 1.0;
  Quantity rho = Quantity(1.2, Unit::coherent(dim(1, -3)));

  void validate() const;
};

using NamedQuantity = std::pair<std::string, Quantity>;

/// One worked prediction, ready for printing. A report can only be built
/// when the prediction carries the dimension the case promises.
class CaseReport {
public:
  static CaseReport make(std::string title, std::vector<NamedQuantity> inputs, ScalingRelation relation,
                         std::vector<std::pair<std::string, double>> prefactors, Quantity prediction,
                         const Dimension& expected, std::optional<Unit> alternate_unit = std::nullopt,
                         std::string notes = {});

  const std::string& title() const noexcept { return title_; }
  const std::vector<NamedQuantity>& inputs() const noexcept { return inputs_; }
  const ScalingRelation& relation() const noexcept { return relation_; }
  const std::vector<std::pair<std::string, double>>& prefactors() const noexcept { return prefactors_; }
  const Quantity& prediction() const noexcept { return prediction_; }
  const std::string& notes() const noexcept { return notes_; }

  std::string render() const;

private:
  CaseReport(std::string title, std::vector<NamedQuantity> inputs, ScalingRelation relation,
             std::vector<std::pair<std::string, double>> prefactors, Quantity prediction,
             std::optional<Unit> alternate_unit, std::string notes);

  std::string title_;
  std::vector<NamedQuantity> inputs_;
  ScalingRelation relation_;
  std::vector<std::pair<std::string, double>> prefactors_;
  Quantity prediction_;
  std::optional<Unit> alternate_unit_;
  std::string notes_;
};

// Blast wave: r = C (E t^2 / rho)^(1/5).
Quantity blast_radius(const BlastConfig& cfg, const Quantity& energy, const Quantity& time);
CaseReport blast_radius_case(const BlastConfig& cfg, const Quantity& energy, const Quantity& time);

struct BlastObservation {
  Quantity radius;
  Quantity time;
};

// E = rho r^5 / (C^5 t^2) per observation, combined by geometric mean.
Quantity blast_yield(const BlastConfig& cfg, const std::vector<BlastObservation>& observations);
CaseReport blast_yield_case(const BlastConfig& cfg, const std::vector<BlastObservation>& observations);

// t = t_ref (m / m_ref)^(2/3).
Quantity roast_time(const Quantity& mass, const Quantity& ref_mass, const Quantity& ref_time);
CaseReport roast_time_case(const Quantity& mass, const Quantity& ref_mass, const Quantity& ref_time);

// Deep-water bow-wave speed for a waterline length: v = sqrt(g l / 2 pi).
Quantity hull_speed(const Quantity& length);
CaseReport hull_speed_case(const Quantity& length);

// v = v_ref (m / m_ref)^(1/6), from the drag balance l^2 v^2 ~ l^3 with m ~ l^3.
Quantity terminal_velocity_scale(const Quantity& ref_speed, const Quantity& ref_mass, const Quantity& mass);
CaseReport terminal_velocity_case(const Quantity& ref_speed, const Quantity& ref_mass, const Quantity& mass);

/// Heat loss through a surface s ~ l^2, combined with m ~ l^k.
ScalingRelation metabolic_chain(const Rational& mass_length_exponent);

struct KleiberDerivations {
  ScalingRelation isometric;   // m ~ l^3   -> s ~ m^2/3
  ScalingRelation allometric;  // m ~ l^8/3 -> s ~ m^3/4
};
KleiberDerivations kleiber_chain_demo();

}  // namespace scaling
