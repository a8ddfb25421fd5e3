#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <regex>

#include <gtest/gtest.h>

#include "scaling/csv.hpp"
#include "scaling/error.hpp"
#include "scaling/svg.hpp"
#include "scaling/synthetic.hpp"

using namespace scaling;
namespace fs = std::filesystem;

namespace {

const Unit& u(std::string_view s) { return *default_registry().find(s); }

std::string thrown_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

double attr(const std::string& svg, const std::string& name) {
  std::smatch m;
  EXPECT_TRUE(std::regex_search(svg, m, std::regex(name + "=\"([-0-9.e+]+)\""))) << name;
  return std::stod(m[1]);
}

struct Frame {
  double x_min, x_max, y_min, y_max;
  double data_x(double px) const { return x_min + (px - kFrameLeft) / kFrameWidth * (x_max - x_min); }
  double data_y(double py) const { return y_min + (kFrameTop + kFrameHeight - py) / kFrameHeight * (y_max - y_min); }
};

Frame frame_of(const std::string& svg) {
  return {attr(svg, "data-x-min"), attr(svg, "data-x-max"), attr(svg, "data-y-min"), attr(svg, "data-y-max")};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

PlotSpec kleiber_plot(bool fit) {
  PlotSpec spec;
  spec.x = {"mass", u("g")};
  spec.y = {"bmr", u("W")};
  spec.show_fit = fit;
  return spec;
}

ModelSpec kleiber_model(bool quadratic) {
  ModelSpec spec;
  spec.response = {"bmr", u("W")};
  spec.log_predictor = {"mass", u("g")};
  spec.include_quadratic = quadratic;
  return spec;
}

}  // namespace

TEST(Csv, ThreeRowLoad) {
  const DataSet ds = parse_csv("mass[g],bmr[W]\n20,0.2\n2000,5.5\n200000,120\n");
  EXPECT_EQ(ds.rows(), 3u);
  EXPECT_EQ(ds.cols(), 2u);
  EXPECT_EQ(ds.column("mass").unit.symbol, "g");
  EXPECT_EQ(ds.column("mass").unit.dimension, dim(1));
  EXPECT_EQ(ds.at("bmr", 2).magnitude(), 120.0);
}

TEST(Csv, CompoundUnitExpressionsInHeader) {
  const DataSet ds = parse_csv("speed[m s^-1],force[kg m s^-2]\n1,2\n");
  EXPECT_EQ(ds.column("speed").unit.dimension, dim(0, 1, -1));
  EXPECT_EQ(ds.column("force").unit.dimension, dim(1, 1, -2));
}

TEST(Csv, UnknownUnitIsNamed) {
  const std::string msg = thrown_message([] { parse_csv("mass[stone],bmr[W]\n1,2\n"); });
  EXPECT_NE(msg.find("stone"), std::string::npos) << msg;
}

TEST(Csv, CommentsAndBlankLinesAreIgnored) {
  const DataSet ds = parse_csv("# leading comment\n\nx[m],y[s]\n1,2\n   # indented comment\n\n3,4\n");
  EXPECT_EQ(ds.rows(), 2u);
  EXPECT_EQ(ds.at("x", 1).magnitude(), 3.0);
}

TEST(Csv, MalformedInput) {
  EXPECT_NE(thrown_message([] { parse_csv("x[m],x[s]\n1,2\n"); }).find("duplicate"), std::string::npos);
  EXPECT_NE(thrown_message([] { parse_csv("x[m],y[s]\n1,2\n3\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(thrown_message([] { parse_csv("x[m],y[s]\n1,abc\n"); }).find("abc"), std::string::npos);
  EXPECT_NE(thrown_message([] { parse_csv("x,y[s]\n1,2\n"); }).find("name[unit]"), std::string::npos);
  EXPECT_NE(thrown_message([] { parse_csv("# only a comment\n"); }).find("missing header"), std::string::npos);
  EXPECT_NE(thrown_message([] { parse_csv("x[m],y[s]\n"); }).find("no data"), std::string::npos);
  EXPECT_THROW(load_csv("/nonexistent/file.csv"), DataError);
}

TEST(Csv, WriteLoadWriteIsStable) {
  const DataSet ds = synthetic::yachts(3, 25);
  const std::string first = write_csv(ds);
  const DataSet back = parse_csv(first);
  EXPECT_EQ(write_csv(back), first);
  for (const auto& col : ds.columns()) EXPECT_EQ(back.column(col.name).values, col.values) << col.name;
}

TEST(Csv, AtomicWriteReplacesFile) {
  const fs::path dir = fs::temp_directory_path() / "scaling_csv_test";
  fs::create_directories(dir);
  const fs::path path = dir / "out.csv";
  write_file_atomic(path, "old\n");
  write_file_atomic(path, "x[m]\n1\n");
  EXPECT_EQ(load_csv(path).rows(), 1u);
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove_all(dir);
}

TEST(Csv, ShippedFixturesLoad) {
  const fs::path data = SCALING_TEST_DATA;
  EXPECT_GE(load_csv(data / "eutheria.csv").rows(), 40u);
  EXPECT_EQ(load_csv(data / "noiseless.csv").rows(), 4u);
  EXPECT_TRUE(load_csv(data / "yachts.csv").has("age"));
}

TEST(Svg, ThreePointsWithoutFit) {
  const DataSet ds = parse_csv("mass[g],bmr[W]\n20,0.2\n2000,5.5\n200000,120\n");
  const std::string svg = emit_svg_plot(ds, nullptr, kleiber_plot(false));
  EXPECT_EQ(count(svg, "class=\"point\""), 3u);
  EXPECT_EQ(count(svg, "class=\"fit\""), 0u);
  EXPECT_NE(svg.find("log(mass/g)"), std::string::npos);
  EXPECT_NE(svg.find("log(bmr/W)"), std::string::npos);
  EXPECT_NE(svg.find("viewBox=\"0 0 640 480\""), std::string::npos);
}

TEST(Svg, PowerLawLineSlopeIsBeta) {
  const DataSet ds = synthetic::kleiber();
  const FitResult fit = fit_power_law(ds, kleiber_model(false));
  const std::string svg = emit_svg_plot(ds, &fit, kleiber_plot(true));
  EXPECT_EQ(count(svg, "class=\"fit\""), 1u);
  const Frame f = frame_of(svg);
  const auto line = svg.substr(svg.find("<line class=\"fit\""));
  const double x1 = f.data_x(attr(line, "x1")), x2 = f.data_x(attr(line, "x2"));
  const double y1 = f.data_y(attr(line, "y1")), y2 = f.data_y(attr(line, "y2"));
  EXPECT_NEAR((y2 - y1) / (x2 - x1), fit.beta.value, 1e-6);
}

TEST(Svg, QuadraticPolylineExtremumAtVertex) {
  const DataSet ds = synthetic::quadratic_log(1.0, -0.4, 0.05, 0.0, 12.0, 20);
  const FitResult fit = fit_quadratic_log(ds, kleiber_model(true));
  const std::string svg = emit_svg_plot(ds, &fit, kleiber_plot(true));
  const Frame f = frame_of(svg);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("<polyline class=\"fit\" points=\"([^\"]+)\"")));
  std::istringstream pts(m[1].str());
  std::string pair;
  double best_px = 0, best_py = -1;
  std::size_t n = 0;
  while (pts >> pair) {
    const auto comma = pair.find(',');
    const double px = std::stod(pair.substr(0, comma)), py = std::stod(pair.substr(comma + 1));
    if (py > best_py) best_py = py, best_px = px;  // minimum of y sits lowest on screen
    ++n;
  }
  EXPECT_EQ(n, 202u);
  const double vertex = -fit.beta.value / (2.0 * fit.gamma->value);
  EXPECT_NEAR(f.data_x(best_px), vertex, 1e-5);
  EXPECT_NEAR(vertex, 4.0, 1e-9);
}

TEST(Svg, OutputIsDeterministic) {
  const DataSet ds = synthetic::kleiber();
  const FitResult fit = fit_power_law(ds, kleiber_model(false));
  EXPECT_EQ(emit_svg_plot(ds, &fit, kleiber_plot(true)), emit_svg_plot(ds, &fit, kleiber_plot(true)));
}

TEST(Svg, NonPositiveValueIsNamed) {
  const DataSet ds = parse_csv("mass[g],bmr[W]\n20,0.2\n0,5.5\n200000,120\n");
  const std::string msg = thrown_message([&] { emit_svg_plot(ds, nullptr, kleiber_plot(false)); });
  EXPECT_NE(msg.find("'mass' row 2"), std::string::npos) << msg;
}

TEST(Svg, MismatchedFitIsRejected) {
  const DataSet ds = synthetic::kleiber();
  const FitResult fit = fit_power_law(ds, kleiber_model(false));
  PlotSpec spec = kleiber_plot(true);
  spec.x.reference = u("kg");
  EXPECT_THROW(emit_svg_plot(ds, &fit, spec), DataError);
}
