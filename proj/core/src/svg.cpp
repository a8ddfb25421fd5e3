#include "scaling/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "scaling/error.hpp"

namespace scaling {

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo <= 0.0) {
      lo -= 1.0;
      hi += 1.0;
      return;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

std::vector<double> log_values(const DataSet& ds, const Regressor& r) {
  const Column& col = ds.column(r.column);
  std::vector<double> out;
  for (std::size_t i = 0; i < col.values.size(); ++i) {
    try {
      out.push_back(log_ratio(Quantity(col.values[i], col.unit), r.reference));
    } catch (const DomainError&) {
      throw DataError(fmt::format("cannot plot non-positive value {} in column '{}' row {}", col.values[i], r.column,
                                  i + 1));
    }
  }
  return out;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string axis_label(const Regressor& r) { return fmt::format("log({}/{})", r.column, r.reference.symbol); }

}  // namespace

std::string emit_svg_plot(const DataSet& ds, const FitResult* fit, const PlotSpec& spec) {
  const std::vector<double> xs = log_values(ds, spec.x);
  const std::vector<double> ys = log_values(ds, spec.y);

  if (fit != nullptr) {
    if (!std::all_of(fit->covariates.begin(), fit->covariates.end(), [](const auto& c) { return c.dropped; })) {
      throw DataError("cannot overlay a fit with covariates on a two-axis plot");
    }
    if (fit->spec.log_predictor.column != spec.x.column || fit->spec.response.column != spec.y.column ||
        !(fit->spec.log_predictor.reference == spec.x.reference) ||
        !(fit->spec.response.reference == spec.y.reference)) {
      throw DataError("fit was produced from different columns or reference units than the plot");
    }
  }

  Range xr, yr;
  for (double v : xs) xr.include(v);
  for (double v : ys) yr.include(v);
  const double gamma = fit && fit->gamma ? fit->gamma->value : 0.0;
  const auto model = [&](double u) { return fit->alpha.value + fit->beta.value * u + gamma * u * u; };

  // Fitted curve samples over the data's x extent.
  std::vector<std::pair<double, double>> curve;
  if (fit != nullptr) {
    const double a = xr.lo;
    const double b = xr.hi;
    if (fit->gamma) {
      constexpr int kSamples = 200;
      for (int i = 0; i <= kSamples; ++i) {
        const double u = a + (b - a) * i / kSamples;
        curve.emplace_back(u, model(u));
      }
      if (gamma != 0.0) {
        const double vertex = -fit->beta.value / (2.0 * gamma);
        if (vertex > a && vertex < b) {
          curve.emplace_back(vertex, model(vertex));
          std::sort(curve.begin(), curve.end());
        }
      }
    } else {
      curve = {{a, model(a)}, {b, model(b)}};
    }
    for (const auto& pt : curve) yr.include(pt.second);
  }
  xr.pad();
  yr.pad();

  const auto px = [&](double u) { return kFrameLeft + (u - xr.lo) / (xr.hi - xr.lo) * kFrameWidth; };
  const auto py = [&](double v) { return kFrameTop + kFrameHeight - (v - yr.lo) / (yr.hi - yr.lo) * kFrameHeight; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
      kSvgWidth, kSvgHeight);
  out += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out += fmt::format(
      "<rect class=\"frame\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" "
      "data-x-min=\"{:.17g}\" data-x-max=\"{:.17g}\" data-y-min=\"{:.17g}\" data-y-max=\"{:.17g}\"/>\n",
      kFrameLeft, kFrameTop, kFrameWidth, kFrameHeight, xr.lo, xr.hi, yr.lo, yr.hi);

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double u = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double v = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    out += fmt::format("<text class=\"tick\" x=\"{:.6f}\" y=\"{:.6f}\" font-size=\"10\" text-anchor=\"middle\">{:.3g}</text>\n",
                       px(u), kFrameTop + kFrameHeight + 14.0, u);
    out += fmt::format("<text class=\"tick\" x=\"{:.6f}\" y=\"{:.6f}\" font-size=\"10\" text-anchor=\"end\">{:.3g}</text>\n",
                       kFrameLeft - 4.0, py(v) + 3.0, v);
  }
  out += fmt::format("<text class=\"x-label\" x=\"{:.6f}\" y=\"{:.6f}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                     kFrameLeft + kFrameWidth / 2.0, kSvgHeight - 20.0, escape(axis_label(spec.x)));
  out += fmt::format(
      "<text class=\"y-label\" x=\"20\" y=\"{0:.6f}\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 20 {0:.6f})\">{1}</text>\n",
      kFrameTop + kFrameHeight / 2.0, escape(axis_label(spec.y)));

  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += fmt::format("<circle class=\"point\" cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"3\" fill=\"black\"/>\n", px(xs[i]),
                       py(ys[i]));
  }

  if (fit != nullptr) {
    if (fit->gamma) {
      std::string points;
      for (const auto& [u, v] : curve) points += fmt::format("{}{:.6f},{:.6f}", points.empty() ? "" : " ", px(u), py(v));
      out += fmt::format("<polyline class=\"fit\" points=\"{}\" fill=\"none\" stroke=\"red\"/>\n", points);
    } else {
      out += fmt::format(
          "<line class=\"fit\" x1=\"{:.6f}\" y1=\"{:.6f}\" x2=\"{:.6f}\" y2=\"{:.6f}\" stroke=\"red\"/>\n",
          px(curve[0].first), py(curve[0].second), px(curve[1].first), py(curve[1].second));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace scaling
