// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "scaling/scaling.hpp"

using namespace scaling;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const Unit& u(std::string_view s) { return *default_registry().find(s); }
Quantity q(std::string_view s) { return parse_quantity(s); }
double in(const Quantity& x, std::string_view unit) { return convert(x, u(unit)).magnitude(); }

NamedDimension nd(std::string name, std::string_view unit) {
  return {std::move(name), default_registry().parse_unit(unit).dimension};
}

ModelSpec mass_spec(const Unit& x0, const Unit& y0, bool quadratic) {
  ModelSpec spec;
  spec.response = {"bmr", y0};
  spec.log_predictor = {"mass", x0};
  spec.include_quadratic = quadratic;
  return spec;
}

std::vector<double> coefficients(const FitResult& f) {
  std::vector<double> out{f.alpha.value, f.beta.value};
  if (f.gamma) out.push_back(f.gamma->value);
  for (const auto& c : f.covariates) out.push_back(c.estimate.value);
  return out;
}

Outcome blast_exponents() {
  Outcome o;
  const auto start = Clock::now();
  const auto rel = solve_target_exponents(nd("r", "m"), {nd("E", "J"), nd("rho", "kg m^-3"), nd("t", "s")});
  const double elapsed = seconds_since(start);
  o.expect(rel.terms().exponent("E") == Rational(1, 5), "E exponent");
  o.expect(rel.terms().exponent("rho") == Rational(-1, 5), "rho exponent");
  o.expect(rel.terms().exponent("t") == Rational(2, 5), "t exponent");
  o.expect(elapsed < 1e-3, fmt::format("took {:.3g} s", elapsed));
  o.detail = o.ok ? rel.str() : o.detail;
  return o;
}

Outcome dimensionless_groups() {
  Outcome o;
  const auto check = [&](const NamedDimensions& qs, const std::vector<Rational>& expected) {
    const auto start = Clock::now();
    const auto basis = pi_basis(qs);
    const double elapsed = seconds_since(start);
    o.expect(basis.size() == 1, "basis size");
    if (basis.size() == 1) o.expect(basis[0].exponents == expected, basis[0].str());
    o.expect(elapsed < 1e-3, fmt::format("took {:.3g} s", elapsed));
  };
  check({nd("E", "J"), nd("t", "s"), nd("rho", "kg m^-3"), nd("r", "m")}, {1, 2, -1, -5});
  check({nd("kappa", "m^2 s^-1"), nd("t", "s"), nd("l", "m")}, {1, 1, -2});
  check({nd("rho", "kg m^-3"), nd("v", "m s^-1"), nd("l", "m"), nd("eta", "Pa s")}, {1, 1, 1, -1});
  return o;
}

Outcome roast_ratio() {
  Outcome o;
  const double hours = in(roast_time(q("5 kg"), q("1 kg"), q("1 hr")), "hr");
  o.expect(std::abs(hours - std::pow(5.0, 2.0 / 3.0)) < 1e-9, fmt::format("{}", hours));
  o.expect(std::abs(hours - 3.0) / 3.0 <= 0.03, "not within 3% of 3 hours");
  if (o.ok) o.detail = fmt::format("{:.4f} hr", hours);
  return o;
}

Outcome hull_footnote() {
  Outcome o;
  const double small = in(hull_speed(q("25 ft")), "knot");
  const double big = in(hull_speed(q("600 ft")), "knot");
  o.expect(small >= 5.7 && small <= 7.7, fmt::format("25 ft -> {} knot", small));
  o.expect(big >= 25.5 && big <= 37.8, fmt::format("600 ft -> {} knot", big));
  if (o.ok) o.detail = fmt::format("{:.2f} knot, {:.2f} knot", small, big);
  return o;
}

Outcome terminal_velocity() {
  Outcome o;
  const double mph = in(terminal_velocity_scale(q("150 mph"), q("200 kg"), q("20 g")), "mph");
  o.expect(std::abs(mph - 150.0 * std::pow(10.0, -2.0 / 3.0)) < 1e-6, fmt::format("{}", mph));
  o.expect(std::abs(mph - 30.0) / 30.0 <= 0.10, "not within 10% of 30 mph");
  if (o.ok) o.detail = fmt::format("{:.2f} mph", mph);
  return o;
}

Outcome kleiber_chaining() {
  Outcome o;
  const auto allometric = chain(ScalingRelation::parse("s ~ l^2"), ScalingRelation::parse("l ~ m^3/8"));
  o.expect(allometric.str() == "s ~ m^3/4", allometric.str());
  const auto demo = kleiber_chain_demo();
  o.expect(demo.isometric.str() == "s ~ m^2/3", demo.isometric.str());
  o.expect(demo.allometric == allometric, demo.allometric.str());
  if (o.ok) o.detail = allometric.str() + "; " + demo.isometric.str();
  return o;
}

Outcome quadratic_unit_change() {
  Outcome o;
  std::mt19937_64 rng(synthetic::kDefaultSeed);
  std::uniform_real_distribution<double> mu_dist(-10.0, 10.0);
  const auto start = Clock::now();
  double worst = 0.0;
  constexpr int kDatasets = 200;
  for (int i = 0; i < kDatasets; ++i) {
    const DataSet ds = synthetic::random_quadratic(rng(), 30);
    const FitResult fit = fit_quadratic_log(ds, mass_spec(u("g"), u("W"), true));
    const double mu = mu_dist(rng);
    const Unit shifted{"g'", u("g").dimension, u("g").scale * std::exp(-mu)};
    const FitResult moved = transform_under_unit_change(fit, shifted);
    const FitResult refit = fit_quadratic_log(ds, mass_spec(shifted, u("W"), true));
    const auto a = coefficients(moved), b = coefficients(refit);
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    o.expect(std::abs(refit.gamma->value - fit.gamma->value) <= 1e-9, "gamma moved");
    o.expect(moved.r_squared == fit.r_squared, "R^2 changed");
  }
  const double elapsed = seconds_since(start);
  o.expect(worst <= 1e-9, fmt::format("max coefficient difference {:.3e}", worst));
  o.expect(elapsed < 5.0, fmt::format("took {:.3g} s", elapsed));
  if (o.ok) o.detail = fmt::format("{} datasets, max diff {:.2e}, {:.3f} s", kDatasets, worst, elapsed);
  return o;
}

Outcome scale_invariance() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_factor(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DataSet ds = synthetic::kleiber(rng(), 40);
    const double base = fit_power_law(ds, mass_spec(u("g"), u("W"), false)).beta.value;
    const Unit x0{"x0", u("g").dimension, std::exp(log_factor(rng))};
    const Unit y0{"y0", u("W").dimension, std::exp(log_factor(rng))};
    worst = std::max(worst, std::abs(fit_power_law(ds, mass_spec(x0, y0, false)).beta.value - base));
  }
  o.expect(worst <= 1e-12, fmt::format("max beta drift {:.3e}", worst));
  if (o.ok) o.detail = fmt::format("max beta drift {:.2e}", worst);
  return o;
}

Outcome residual_weighting() {
  Outcome o;
  const DataSet ds = synthetic::quadratic_log(-3.5, 0.75, 0.0, 0.0, 14.0, 20);
  const FitResult fit = fit_power_law(ds, mass_spec(u("g"), u("W"), false));
  const Quantity mouse(20, u("g")), bear(200, u("kg"));
  const double ratio = residual_distance_ratio({mouse, predict(fit, mouse) * 10.0}, {bear, predict(fit, bear) * 1.1},
                                               fit, ResidualSpace::Log);
  o.expect(std::abs(ratio - std::log(10.0) / std::log(1.1)) < 1e-6, fmt::format("{}", ratio));
  if (o.ok) o.detail = fmt::format("ratio {:.3f}", ratio);
  return o;
}

Outcome synthetic_recovery() {
  Outcome o;
  const auto start = Clock::now();
  const FitResult k = fit_power_law(synthetic::kleiber(), mass_spec(u("g"), u("W"), false));
  o.expect(std::abs(k.beta.value - 0.75) <= 2.0 * k.beta.se, fmt::format("kleiber beta {}", k.beta.value));
  o.expect(k.beta.se <= 0.02, fmt::format("kleiber se {}", k.beta.se));
  ModelSpec spec;
  spec.response = {"price", u("GBP")};
  spec.log_predictor = {"length", u("ft")};
  spec.linear_covariates = {{"age", u("yr")}};
  const FitResult y = fit_with_covariates(synthetic::yachts(), spec);
  const auto& delta = y.covariates.at(0).estimate;
  o.expect(std::abs(y.beta.value - 3.5) <= 2.0 * y.beta.se, fmt::format("yacht beta {}", y.beta.value));
  o.expect(std::abs(delta.value + 0.03) <= 2.0 * delta.se, fmt::format("yacht delta {}", delta.value));
  const double elapsed = seconds_since(start);
  o.expect(elapsed < 1.0, fmt::format("took {:.3g} s", elapsed));
  if (o.ok) {
    o.detail = fmt::format("beta {:.4f}+-{:.4f}; yacht beta {:.3f}+-{:.3f}, delta {:.4f}+-{:.4f}", k.beta.value,
                           k.beta.se, y.beta.value, y.beta.se, delta.value, delta.se);
  }
  return o;
}

Outcome blast_round_trip() {
  Outcome o;
  const BlastConfig cfg;
  const std::vector<double> times{0.006, 0.010, 0.016, 0.025, 0.040};
  std::vector<BlastObservation> clean;
  for (double t : times) clean.push_back({blast_radius(cfg, q("8e13 J"), Quantity(t, u("s"))), Quantity(t, u("s"))});
  const double exact = in(blast_yield(cfg, clean), "J") / 8e13 - 1.0;
  o.expect(std::abs(exact) <= 1e-9, fmt::format("clean error {:.3e}", exact));

  // 1% multiplicative noise on every radius, fixed seed.
  std::mt19937_64 rng(synthetic::kDefaultSeed);
  std::uniform_real_distribution<double> noise(0.99, 1.01);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BlastObservation> noisy = clean;
    for (auto& ob : noisy) ob.radius = ob.radius * noise(rng);
    worst = std::max(worst, std::abs(in(blast_yield(cfg, noisy), "J") / 8e13 - 1.0));
  }
  o.expect(worst <= 0.052, fmt::format("noisy error {:.4f}", worst));
  if (o.ok) o.detail = fmt::format("clean {:.1e}, worst noisy {:.2f}%", std::abs(exact), 100.0 * worst);
  return o;
}

Outcome beam_bound() {
  Outcome o;
  o.expect(!check_exponent_bound(2.70, Rational(7, 3), Rational(8, 3)), "2.70 accepted");
  o.expect(check_exponent_bound(2.5, Rational(7, 3), Rational(8, 3)), "2.5 rejected");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"blast exponents", blast_exponents},
      {"dimensionless groups", dimensionless_groups},
      {"roast ratio", roast_ratio},
      {"hull speed", hull_footnote},
      {"terminal velocity", terminal_velocity},
      {"kleiber chaining", kleiber_chaining},
      {"quadratic unit-change law", quadratic_unit_change},
      {"power-law scale invariance", scale_invariance},
      {"residual weighting", residual_weighting},
      {"synthetic exponent recovery", synthetic_recovery},
      {"blast round-trip", blast_round_trip},
      {"beam bound", beam_bound},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    failures += o.ok ? 0 : 1;
    fmt::print("[{}] {:>2} {}{}\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
               o.detail.empty() ? "" : " -- " + o.detail);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
