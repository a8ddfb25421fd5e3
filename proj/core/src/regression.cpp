#include "scaling/regression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

std::vector<double> log_column(const DataSet& ds, const Regressor& r) {
  const Column& col = ds.column(r.column);
  require_dimension(col.unit.dimension, r.reference.dimension,
                    fmt::format("column '{}' against reference '{}'", r.column, r.reference.symbol));
  std::vector<double> out;
  out.reserve(col.values.size());
  for (std::size_t i = 0; i < col.values.size(); ++i) {
    try {
      out.push_back(log_ratio(Quantity(col.values[i], col.unit), r.reference));
    } catch (const DomainError&) {
      throw DataError(fmt::format("non-positive value {} in column '{}' row {}; a logarithm needs a positive ratio",
                                  col.values[i], r.column, i + 1));
    }
  }
  return out;
}

std::vector<double> linear_column(const DataSet& ds, const Regressor& r) {
  const Column& col = ds.column(r.column);
  std::vector<double> out;
  out.reserve(col.values.size());
  for (double v : col.values) out.push_back(convert(Quantity(v, col.unit), r.reference).magnitude());
  return out;
}

std::string log_label(const Regressor& r) { return fmt::format("log({}/{})", r.column, r.reference.symbol); }

std::vector<std::vector<double>> to_nested(const Eigen::MatrixXd& m) {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  }
  return out;
}

Eigen::MatrixXd from_nested(const std::vector<std::vector<double>>& v) {
  const auto p = static_cast<Eigen::Index>(v.size());
  Eigen::MatrixXd m(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) m(i, j) = v[i][j];
  }
  return m;
}

double sqrt_nonneg(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

void require_plain(const ModelSpec& spec, const char* what) {
  if (spec.include_quadratic) throw Error(fmt::format("{}: spec must not request a quadratic term", what));
  if (!spec.linear_covariates.empty()) throw Error(fmt::format("{}: spec must not carry covariates", what));
}

}  // namespace

bool FitResult::is_pure_power_law() const {
  return !gamma && std::all_of(covariates.begin(), covariates.end(), [](const auto& c) { return c.dropped; });
}

FitResult fit_model(const DataSet& ds, const ModelSpec& spec) {
  const std::size_t n = ds.rows();
  const std::vector<double> y = log_column(ds, spec.response);
  const std::vector<double> u = log_column(ds, spec.log_predictor);

  std::vector<CovariateEstimate> covariates;
  std::vector<std::vector<double>> active;
  for (const auto& c : spec.linear_covariates) {
    auto values = linear_column(ds, c);
    const bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
    covariates.push_back({c.column, c.reference, {0.0, 0.0}, all_zero});
    if (!all_zero) active.push_back(std::move(values));
  }

  const std::size_t p = 2 + (spec.include_quadratic ? 1 : 0) + active.size();
  if (n < 3 || n < p + 1) {
    throw DataError(fmt::format("insufficient degrees of freedom: n={} rows for p={} parameters (need n >= {})", n,
                                p, std::max<std::size_t>(3, p + 1)));
  }

  // Centre and scale the log predictor so log and log^2 stay well conditioned;
  // the coefficients are mapped back to the caller's reference afterwards.
  const double centre = std::accumulate(u.begin(), u.end(), 0.0) / static_cast<double>(n);
  double spread = 0.0;
  for (double v : u) spread += (v - centre) * (v - centre);
  spread = std::sqrt(spread / static_cast<double>(n));
  if (!(spread > 1e-12 * std::max(1.0, std::abs(centre)))) {
    throw DataError(fmt::format("degenerate predictor: {} has zero variance", log_label(spec.log_predictor)));
  }

  const auto N = static_cast<Eigen::Index>(n);
  const auto P = static_cast<Eigen::Index>(p);
  Eigen::MatrixXd X(N, P);
  Eigen::VectorXd Y(N);
  std::vector<std::string> labels = {"intercept", log_label(spec.log_predictor)};
  if (spec.include_quadratic) labels.push_back("log^2(" + spec.log_predictor.column + "/" +
                                               spec.log_predictor.reference.symbol + ")");
  for (const auto& c : covariates) {
    if (!c.dropped) labels.push_back(c.column);
  }
  for (Eigen::Index i = 0; i < N; ++i) {
    const double z = (u[i] - centre) / spread;
    Eigen::Index j = 0;
    X(i, j++) = 1.0;
    X(i, j++) = z;
    if (spec.include_quadratic) X(i, j++) = z * z;
    for (const auto& col : active) X(i, j++) = col[i];
    Y(i) = y[i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < P) {
    std::vector<std::string> offending;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index k = qr.rank(); k < P; ++k) offending.push_back(labels[perm(k)]);
    std::string list;
    for (const auto& name : offending) list += (list.empty() ? "" : ", ") + name;
    throw CollinearDesign(fmt::format("collinear design: {} depends linearly on the other columns", list),
                          std::move(offending));
  }

  const Eigen::VectorXd theta_std = qr.solve(Y);
  const Eigen::VectorXd resid = Y - X * theta_std;
  const double rss = resid.squaredNorm();
  const double sigma2 = rss / static_cast<double>(n - p);

  // (X'X)^-1 = P R^-1 R^-T P^T
  const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(P, P).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(P, P));
  const auto& perm = qr.colsPermutation();
  const Eigen::MatrixXd xtx_inv = perm * (Rinv * Rinv.transpose()) * perm.transpose();

  // theta = T theta_std with u = centre + spread z.
  Eigen::MatrixXd T = Eigen::MatrixXd::Identity(P, P);
  T(0, 1) = -centre / spread;
  T(1, 1) = 1.0 / spread;
  if (spec.include_quadratic) {
    const double s2 = spread * spread;
    T(0, 2) = centre * centre / s2;
    T(1, 2) = -2.0 * centre / s2;
    T(2, 2) = 1.0 / s2;
  }
  const Eigen::VectorXd theta = T * theta_std;
  const Eigen::MatrixXd cov = sigma2 * (T * xtx_inv * T.transpose());

  const double mean_y = Y.mean();
  const double tss = (Y.array() - mean_y).square().sum();
  double r2 = tss > 0.0 ? 1.0 - rss / tss : 1.0;
  r2 = std::clamp(r2, 0.0, 1.0);

  FitResult fit;
  fit.spec = spec;
  fit.n = n;
  fit.p = p;
  fit.rss = rss;
  fit.r_squared = r2;
  fit.residuals_log.assign(resid.data(), resid.data() + resid.size());
  fit.covariance = to_nested(cov);

  Eigen::Index j = 0;
  fit.alpha = {theta(j), sqrt_nonneg(cov(j, j))};
  ++j;
  fit.beta = {theta(j), sqrt_nonneg(cov(j, j))};
  ++j;
  if (spec.include_quadratic) {
    fit.gamma = Estimate{theta(j), sqrt_nonneg(cov(j, j))};
    ++j;
  }
  for (auto& c : covariates) {
    if (c.dropped) continue;
    c.estimate = {theta(j), sqrt_nonneg(cov(j, j))};
    ++j;
  }
  fit.covariates = std::move(covariates);
  return fit;
}

FitResult fit_power_law(const DataSet& ds, const ModelSpec& spec) {
  require_plain(spec, "fit_power_law");
  return fit_model(ds, spec);
}

FitResult fit_with_covariates(const DataSet& ds, const ModelSpec& spec) {
  if (spec.include_quadratic) throw Error("fit_with_covariates: use fit_quadratic_log for a quadratic term");
  return fit_model(ds, spec);
}

FitResult fit_quadratic_log(const DataSet& ds, const ModelSpec& spec) {
  ModelSpec quadratic = spec;
  quadratic.include_quadratic = true;
  return fit_model(ds, quadratic);
}

double unit_change_shift(const Unit& old_reference, const Unit& new_reference) {
  return log_ratio(Quantity(1.0, old_reference), new_reference);
}

FitResult transform_under_unit_change(const FitResult& fit, const Unit& new_reference) {
  const double mu = unit_change_shift(fit.spec.log_predictor.reference, new_reference);
  const double gamma = fit.gamma ? fit.gamma->value : 0.0;

  FitResult out = fit;
  out.spec.log_predictor.reference = new_reference;
  // log(x/x0) = log(x/x0') - mu; substitute and collect powers.
  out.alpha.value = fit.alpha.value - fit.beta.value * mu + gamma * mu * mu;
  out.beta.value = fit.beta.value - 2.0 * gamma * mu;

  const auto P = static_cast<Eigen::Index>(fit.covariance.size());
  if (P == 0) return out;
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(P, P);
  A(0, 1) = -mu;
  if (fit.gamma) {
    A(0, 2) = mu * mu;
    A(1, 2) = -2.0 * mu;
  }
  const Eigen::MatrixXd cov = A * from_nested(fit.covariance) * A.transpose();
  out.covariance = to_nested(cov);
  out.alpha.se = sqrt_nonneg(cov(0, 0));
  out.beta.se = sqrt_nonneg(cov(1, 1));
  return out;
}

Quantity predict(const FitResult& fit, const Quantity& x) {
  if (!std::all_of(fit.covariates.begin(), fit.covariates.end(), [](const auto& c) { return c.dropped; })) {
    throw Error("predict: fit has covariates; a prediction needs their values");
  }
  const double u = log_ratio(x, fit.spec.log_predictor.reference);
  double log_y = fit.alpha.value + fit.beta.value * u;
  if (fit.gamma) log_y += fit.gamma->value * u * u;
  return {std::exp(log_y), fit.spec.response.reference};
}

double residual_distance_ratio(const Observation& a, const Observation& b, const FitResult& fit,
                               ResidualSpace space) {
  if (!fit.is_pure_power_law()) throw Error("residual_distance_ratio needs a pure power-law fit");
  const auto residual = [&](const Observation& obs) {
    const Quantity fitted = predict(fit, obs.x);
    if (space == ResidualSpace::Log) return log_ratio(obs.y, fitted);
    return convert(obs.y, fit.spec.response.reference).magnitude() - fitted.magnitude();
  };
  const double ra = residual(a);
  const double rb = residual(b);
  if (rb == 0.0) throw DomainError("residual_distance_ratio: second point lies on the fit; ratio undefined");
  return std::abs(ra) / std::abs(rb);
}

std::string format_report(const FitResult& fit, bool full_precision) {
  const auto num = [&](double v) { return full_precision ? fmt::format("{:.17g}", v) : fmt::format("{:.6f}", v); };
  std::string model = "power_law";
  if (fit.gamma) model = "quadratic_log";
  else if (!fit.covariates.empty()) model = "power_law_covariates";

  std::string out;
  const auto line = [&](std::string_view key, const std::string& value) {
    out += fmt::format("{}={}\n", key, value);
  };
  line("model", model);
  line("response", fit.spec.response.column);
  line("response_reference", fit.spec.response.reference.symbol);
  line("predictor", fit.spec.log_predictor.column);
  line("predictor_reference", fit.spec.log_predictor.reference.symbol);
  line("n", std::to_string(fit.n));
  line("p", std::to_string(fit.p));
  line("alpha", num(fit.alpha.value));
  line("alpha_se", num(fit.alpha.se));
  line("beta", num(fit.beta.value));
  line("beta_se", num(fit.beta.se));
  if (fit.gamma) {
    line("gamma", num(fit.gamma->value));
    line("gamma_se", num(fit.gamma->se));
  }
  for (const auto& c : fit.covariates) {
    line("delta." + c.column, num(c.estimate.value));
    line("delta." + c.column + "_se", num(c.estimate.se));
    line("delta." + c.column + "_reference", c.reference.symbol);
    if (c.dropped) line("delta." + c.column + "_dropped", "true");
  }
  line("r_squared", num(fit.r_squared));
  line("rss", num(fit.rss));
  return out;
}

}  // namespace scaling
