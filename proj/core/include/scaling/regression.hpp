#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scaling/dataset.hpp"
#include "scaling/units.hpp"

namespace scaling {

/// A data column together with the reference unit that turns it into a pure
/// number: log(x/x0) for logged terms, x/x0 for linear covariates.
struct Regressor {
  std::string column;
  Unit reference;
};

/// log(y/y0) = alpha + beta log(x/x0) [+ gamma log^2(x/x0)] [+ sum delta_k c_k/c0_k]
struct ModelSpec {
  Regressor response;
  Regressor log_predictor;
  bool include_quadratic = false;
  std::vector<Regressor> linear_covariates;
};

struct Estimate {
  double value = 0.0;
  double se = 0.0;
};

struct CovariateEstimate {
  std::string column;
  Unit reference;
  Estimate estimate;
  // An identically-zero covariate carries no information; it is left out of
  // the design and reported as 0 +- 0.
  bool dropped = false;
};

struct FitResult {
  Estimate alpha;
  Estimate beta;
  std::optional<Estimate> gamma;
  std::vector<CovariateEstimate> covariates;
  double r_squared = 0.0;
  double rss = 0.0;
  std::vector<double> residuals_log;
  ModelSpec spec;  // carries the reference units that pin the coefficients
  std::size_t n = 0;
  std::size_t p = 0;
  // Coefficient covariance, ordered alpha, beta, [gamma], fitted covariates.
  std::vector<std::vector<double>> covariance;

  bool is_pure_power_law() const;
};

/// The general least-squares engine behind the three fit entry points.
FitResult fit_model(const DataSet& ds, const ModelSpec& spec);

/// OLS of log(y/y0) on log(x/x0). Requires a spec without quadratic term or covariates.
FitResult fit_power_law(const DataSet& ds, const ModelSpec& spec);
FitResult fit_with_covariates(const DataSet& ds, const ModelSpec& spec);
FitResult fit_quadratic_log(const DataSet& ds, const ModelSpec& spec);

/// Re-expresses a fit against a new predictor reference unit. With
/// mu = ln(x0/x0'), so that log(x/x0') = log(x/x0) + mu:
/// alpha -> alpha - beta mu + gamma mu^2, beta -> beta - 2 gamma mu.
/// Standard errors follow through the covariance; R^2 and residuals are untouched.
FitResult transform_under_unit_change(const FitResult& fit, const Unit& new_reference);

/// ln(x0/x0') for the shift above.
double unit_change_shift(const Unit& old_reference, const Unit& new_reference);

/// Fitted response at x for a pure power-law fit, in the response reference unit.
Quantity predict(const FitResult& fit, const Quantity& x);

struct Observation {
  Quantity x;
  Quantity y;
};

enum class ResidualSpace { Log, Natural };

/// |residual(a)| / |residual(b)|: log(y/y_fit) in log space, y - y_fit in natural space.
double residual_distance_ratio(const Observation& a, const Observation& b, const FitResult& fit,
                               ResidualSpace space);

/// Flat key=value report, one field per line in a fixed order. Coefficients
/// print with six decimals unless full_precision asks for round-trip digits.
std::string format_report(const FitResult& fit, bool full_precision = false);

}  // namespace scaling
