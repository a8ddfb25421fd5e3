#pragma once

#include <filesystem>
#include <string>

#include "scaling/dataset.hpp"
#include "scaling/regression.hpp"

namespace scaling {

struct PlotSpec {
  Regressor x;
  Regressor y;
  bool show_fit = false;
  std::filesystem::path output;
};

// Plot frame inside the fixed 640x480 viewBox.
inline constexpr double kSvgWidth = 640.0;
inline constexpr double kSvgHeight = 480.0;
inline constexpr double kFrameLeft = 80.0;
inline constexpr double kFrameTop = 30.0;
inline constexpr double kFrameWidth = 530.0;
inline constexpr double kFrameHeight = 380.0;

/// Log-log scatter of (log(x/x0), log(y/y0)) with optional fitted line, or
/// fitted parabola when the fit carries a quadratic term. The output is a
/// pure function of its inputs.
std::string emit_svg_plot(const DataSet& ds, const FitResult* fit, const PlotSpec& spec);

}  // namespace scaling
