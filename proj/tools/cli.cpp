#include "cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "scaling/scaling.hpp"

namespace scaling::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "name:value unit" or "name:unit"; only the dimension matters for derivations.
NamedDimension parse_named(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(fmt::format("expected name:unit, got '{}'", text));
  }
  const std::string name(trim(text.substr(0, colon)));
  const std::string_view rest = trim(text.substr(colon + 1));
  if (name.empty()) throw ParseError(fmt::format("missing quantity name in '{}'", text));
  const bool numeric = !rest.empty() && (std::isdigit(static_cast<unsigned char>(rest.front())) || rest.front() == '-' ||
                                         rest.front() == '+' || rest.front() == '.');
  if (numeric) return {name, parse_quantity(rest).dimension()};
  return {name, default_registry().parse_unit(rest).dimension};
}

NamedDimensions parse_named_list(std::string_view text) {
  NamedDimensions out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!item.empty()) out.push_back(parse_named(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Options shared by fit and the diagnostics.
struct FitOptions {
  std::string csv;
  std::string x;
  std::string y;
  std::string x0;
  std::string y0;
  std::vector<std::string> covariates;
  bool quadratic = false;
};

void add_fit_options(CLI::App* cmd, FitOptions& o, bool with_model_flags) {
  cmd->add_option("--csv", o.csv, "Unit-annotated CSV file")->required();
  cmd->add_option("--x", o.x, "Predictor column (logged)")->required();
  cmd->add_option("--y", o.y, "Response column (logged)")->required();
  cmd->add_option("--x0", o.x0, "Predictor reference unit (default: the column's unit)");
  cmd->add_option("--y0", o.y0, "Response reference unit (default: the column's unit)");
  if (with_model_flags) {
    cmd->add_option("--covariate", o.covariates, "Column entering linearly, per its own unit (repeatable)");
    cmd->add_flag("--quadratic", o.quadratic, "Add a log^2 term");
  }
}

Unit reference_or_column_unit(const std::string& text, const Column& col) {
  return text.empty() ? col.unit : default_registry().parse_unit(text);
}

ModelSpec build_spec(const DataSet& ds, const FitOptions& o) {
  ModelSpec spec;
  spec.response = {o.y, reference_or_column_unit(o.y0, ds.column(o.y))};
  spec.log_predictor = {o.x, reference_or_column_unit(o.x0, ds.column(o.x))};
  spec.include_quadratic = o.quadratic;
  for (const auto& c : o.covariates) spec.linear_covariates.push_back({c, ds.column(c).unit});
  return spec;
}

std::string g6(double v) { return fmt::format("{:.6g}", v); }

void run_derive(const std::string& target_text, const std::string& params_text, std::ostream& out) {
  const NamedDimension target = parse_named(target_text);
  const NamedDimensions params = parse_named_list(params_text);
  try {
    out << solve_target_exponents(target, params).str() << '\n';
  } catch (const Underdetermined& e) {
    NamedDimensions all{target};
    all.insert(all.end(), params.begin(), params.end());
    out << fmt::format("underdetermined: {} free direction(s); no unique power law for '{}'\n", e.free_directions(),
                       target.name);
    for (const auto& g : pi_basis(all)) out << g.str() << '\n';
  }
}

void run_pi(const std::string& text, std::ostream& out) {
  const auto groups = pi_basis(parse_named_list(text));
  if (groups.empty()) out << "no dimensionless groups\n";
  for (const auto& g : groups) out << g.str() << '\n';
}

void run_unit_change(const FitOptions& o, const std::string& new_x0, bool full, std::ostream& out) {
  const DataSet ds = load_csv(o.csv);
  const ModelSpec spec = build_spec(ds, o);
  const FitResult fit = fit_model(ds, spec);
  const Unit new_unit = default_registry().parse_unit(new_x0);
  const FitResult transformed = transform_under_unit_change(fit, new_unit);
  ModelSpec respec = spec;
  respec.log_predictor.reference = new_unit;
  const FitResult refit = fit_model(ds, respec);

  const auto num = [&](double v) { return full ? fmt::format("{:.17g}", v) : fmt::format("{:.6f}", v); };
  out << fmt::format("mu={}\n", num(unit_change_shift(spec.log_predictor.reference, new_unit)));
  out << fmt::format("{:<12} {:>22} {:>22} {:>12}\n", "coefficient", "transformed", "refit", "abs_diff");
  double worst = 0.0;
  const auto row = [&](const std::string& name, double a, double b) {
    const double d = std::abs(a - b);
    worst = std::max(worst, d);
    out << fmt::format("{:<12} {:>22} {:>22} {:>12.3e}\n", name, num(a), num(b), d);
  };
  row("alpha", transformed.alpha.value, refit.alpha.value);
  row("beta", transformed.beta.value, refit.beta.value);
  if (fit.gamma) row("gamma", transformed.gamma->value, refit.gamma->value);
  for (std::size_t i = 0; i < fit.covariates.size(); ++i) {
    row("delta." + fit.covariates[i].column, transformed.covariates[i].estimate.value,
        refit.covariates[i].estimate.value);
  }
  out << fmt::format("r_squared={} (refit {})\n", num(transformed.r_squared), num(refit.r_squared));
  out << fmt::format("max_abs_diff={:.3e}\n", worst);
}

void run_residuals(const FitOptions& o, const std::vector<std::size_t>& rows, const std::string& space_text,
                   std::ostream& out) {
  if (rows.size() != 2) throw DataError("diagnose residuals needs exactly two --row values");
  ResidualSpace space;
  if (space_text == "log") space = ResidualSpace::Log;
  else if (space_text == "natural") space = ResidualSpace::Natural;
  else throw DataError(fmt::format("--space must be log or natural, got '{}'", space_text));

  const DataSet ds = load_csv(o.csv);
  const FitResult fit = fit_power_law(ds, build_spec(ds, o));
  const auto observation = [&](std::size_t row) {
    if (row < 1 || row > ds.rows()) throw DataError(fmt::format("row {} out of range 1..{}", row, ds.rows()));
    return Observation{ds.at(o.x, row - 1), ds.at(o.y, row - 1)};
  };
  const Observation a = observation(rows[0]);
  const Observation b = observation(rows[1]);
  out << fmt::format("fit: log({}/{}) = {} + {} log({}/{})\n", o.y, fit.spec.response.reference.symbol,
                     g6(fit.alpha.value), g6(fit.beta.value), o.x, fit.spec.log_predictor.reference.symbol);
  for (const auto& [label, obs] : {std::pair{rows[0], a}, std::pair{rows[1], b}}) {
    const Quantity fitted = predict(fit, obs.x);
    out << fmt::format("row {}: observed {} fitted {} ({:.6g}x)\n", label, obs.y.str(), fitted.str(),
                       obs.y.si() / fitted.si());
  }
  out << fmt::format("space={}\nratio={}\n", space_text, g6(residual_distance_ratio(a, b, fit, space)));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensional analysis and scaling-law workbench", "scaling"};
  app.require_subcommand(1);

  std::string target, params;
  auto* derive = app.add_subcommand("derive", "Solve for the unique power law giving a target dimension");
  derive->add_option("--target", target, "name:unit, e.g. \"v:m s^-1\"")->required();
  derive->add_option("--params", params, "Comma-separated name:unit list")->required();

  std::string quantities;
  auto* pi = app.add_subcommand("pi", "Basis of dimensionless groups");
  pi->add_option("--quantities", quantities, "Comma-separated name:unit list")->required();

  FitOptions fit_opts;
  bool full_precision = false;
  auto* fit = app.add_subcommand("fit", "Least-squares power-law fit in log space");
  add_fit_options(fit, fit_opts, true);
  fit->add_flag("--full-precision", full_precision, "Print round-trip digits");

  auto* diagnose = app.add_subcommand("diagnose", "Unit-change and residual-weighting diagnostics");
  diagnose->require_subcommand(1);
  FitOptions uc_opts;
  std::string new_x0;
  bool uc_full = false;
  auto* unit_change = diagnose->add_subcommand("unit-change", "Transformed vs refit coefficients under a new x0");
  add_fit_options(unit_change, uc_opts, true);
  unit_change->add_option("--new-x0", new_x0, "New predictor reference unit")->required();
  unit_change->add_flag("--full-precision", uc_full, "Print round-trip digits");
  FitOptions res_opts;
  std::vector<std::size_t> rows;
  std::string space = "log";
  auto* residuals = diagnose->add_subcommand("residuals", "Distance ratio of two rows from a power-law fit");
  add_fit_options(residuals, res_opts, false);
  residuals->add_option("--row", rows, "1-based data row (give twice: A then B)")->required();
  residuals->add_option("--space", space, "log or natural")->check(CLI::IsMember({"log", "natural"}));

  auto* predict_cmd = app.add_subcommand("predict", "Worked scaling predictions");
  predict_cmd->require_subcommand(1);
  std::vector<std::string> energies, radii, times;
  double blast_c = 1.0;
  std::string rho = "1.2 kg m^-3";
  auto* blast = predict_cmd->add_subcommand("blast", "Blast radius from energy, or yield from (radius, time) pairs");
  blast->add_option("--energy", energies, "Released energy, e.g. \"8e13 J\"");
  blast->add_option("--radius", radii, "Observed radius (repeatable, paired with --time)");
  blast->add_option("--time", times, "Elapsed time (repeatable)")->required();
  blast->add_option("--C", blast_c, "Dimensionless blast constant");
  blast->add_option("--rho", rho, "Air density");

  std::string mass, ref_mass, ref_time;
  auto* roast = predict_cmd->add_subcommand("roast", "Roasting time from a reference bird");
  roast->add_option("--mass", mass, "Mass to roast")->required();
  roast->add_option("--ref-mass", ref_mass, "Reference mass")->required();
  roast->add_option("--ref-time", ref_time, "Reference roasting time")->required();

  std::string length;
  auto* hull = predict_cmd->add_subcommand("hull", "Hull speed from waterline length");
  hull->add_option("--length", length, "Waterline length")->required();

  std::string ref_speed, fall_ref_mass, fall_mass;
  auto* fall = predict_cmd->add_subcommand("fall", "Terminal velocity scaled from a reference animal");
  fall->add_option("--ref-speed", ref_speed, "Reference terminal velocity")->required();
  fall->add_option("--ref-mass", fall_ref_mass, "Reference mass")->required();
  fall->add_option("--mass", fall_mass, "Mass of interest")->required();

  FitOptions plot_opts;
  std::string plot_out;
  bool plot_fit = false;
  auto* plot = app.add_subcommand("plot", "Write a log-log SVG scatter");
  add_fit_options(plot, plot_opts, false);
  plot->add_flag("--quadratic", plot_opts.quadratic, "Overlay a quadratic-in-log fit (with --fit)");
  plot->add_option("--out", plot_out, "Output SVG path")->required();
  plot->add_flag("--fit", plot_fit, "Overlay the least-squares fit");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*derive) {
      run_derive(target, params, out);
    } else if (*pi) {
      run_pi(quantities, out);
    } else if (*fit) {
      const DataSet ds = load_csv(fit_opts.csv);
      out << format_report(fit_model(ds, build_spec(ds, fit_opts)), full_precision);
    } else if (*unit_change) {
      run_unit_change(uc_opts, new_x0, uc_full, out);
    } else if (*residuals) {
      run_residuals(res_opts, rows, space, out);
    } else if (*blast) {
      BlastConfig cfg;
      cfg.C = blast_c;
      cfg.rho = parse_quantity(rho);
      if (!energies.empty() && !radii.empty()) throw DataError("give either --energy or --radius, not both");
      if (!energies.empty()) {
        if (energies.size() != 1 || times.size() != 1) throw DataError("radius prediction takes one --energy and one --time");
        out << blast_radius_case(cfg, parse_quantity(energies[0]), parse_quantity(times[0])).render();
      } else {
        if (radii.size() != times.size()) throw DataError("each --radius needs a matching --time");
        std::vector<BlastObservation> obs;
        for (std::size_t i = 0; i < radii.size(); ++i) obs.push_back({parse_quantity(radii[i]), parse_quantity(times[i])});
        out << blast_yield_case(cfg, obs).render();
      }
    } else if (*roast) {
      out << roast_time_case(parse_quantity(mass), parse_quantity(ref_mass), parse_quantity(ref_time)).render();
    } else if (*hull) {
      out << hull_speed_case(parse_quantity(length)).render();
    } else if (*fall) {
      out << terminal_velocity_case(parse_quantity(ref_speed), parse_quantity(fall_ref_mass), parse_quantity(fall_mass))
                 .render();
    } else if (*plot) {
      const DataSet ds = load_csv(plot_opts.csv);
      const ModelSpec spec = build_spec(ds, plot_opts);
      PlotSpec ps{spec.log_predictor, spec.response, plot_fit, plot_out};
      std::optional<FitResult> fitted;
      if (plot_fit) fitted = fit_model(ds, spec);
      write_file_atomic(ps.output, emit_svg_plot(ds, fitted ? &*fitted : nullptr, ps));
      out << fmt::format("wrote {} ({} points{})\n", plot_out, ds.rows(), plot_fit ? ", fitted" : "");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace scaling::cli
