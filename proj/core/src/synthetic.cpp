#include "scaling/synthetic.hpp"

#include <cmath>
#include <random>

namespace scaling::synthetic {

namespace {

const Unit& unit(std::string_view symbol) { return *default_registry().find(symbol); }

}  // namespace

DataSet kleiber(std::uint64_t seed, std::size_t n, double beta, double sigma, double alpha) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_mass(std::log(10.0), std::log(1e6));
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> mass, rate;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = log_mass(rng);
    mass.push_back(std::exp(u));
    rate.push_back(std::exp(alpha + beta * u + noise(rng)));
  }
  return DataSet({{"mass", unit("g"), std::move(mass)}, {"bmr", unit("W"), std::move(rate)}});
}

DataSet yachts(std::uint64_t seed, std::size_t n, double beta, double delta, double sigma) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> length_ft(20.0, 60.0);
  std::uniform_real_distribution<double> age_yr(0.0, 40.0);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> length, age, price;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = length_ft(rng);
    const double a = age_yr(rng);
    length.push_back(l);
    age.push_back(a);
    price.push_back(std::exp(std::log(2.0) + beta * std::log(l) + delta * a + noise(rng)));
  }
  return DataSet({{"length", unit("ft"), std::move(length)},
                  {"price", unit("GBP"), std::move(price)},
                  {"age", unit("yr"), std::move(age)}});
}

DataSet quadratic_log(double alpha, double beta, double gamma, double u_lo, double u_hi, std::size_t n) {
  std::vector<double> mass, rate;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = n == 1 ? u_lo : u_lo + (u_hi - u_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    mass.push_back(std::exp(u));
    rate.push_back(std::exp(alpha + beta * u + gamma * u * u));
  }
  return DataSet({{"mass", unit("g"), std::move(mass)}, {"bmr", unit("W"), std::move(rate)}});
}

DataSet random_quadratic(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> centre(-3.0, 10.0);
  std::uniform_real_distribution<double> width(1.0, 8.0);
  std::normal_distribution<double> noise(0.0, 0.1);
  const double alpha = 2.0 * coef(rng);
  const double beta = coef(rng);
  const double gamma = 0.05 * coef(rng);
  const double lo = centre(rng);
  const double hi = lo + width(rng);
  std::uniform_real_distribution<double> u_dist(lo, hi);
  std::vector<double> mass, rate;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_dist(rng);
    mass.push_back(std::exp(u));
    rate.push_back(std::exp(alpha + beta * u + gamma * u * u + noise(rng)));
  }
  return DataSet({{"mass", unit("g"), std::move(mass)}, {"bmr", unit("W"), std::move(rate)}});
}

}  // namespace scaling::synthetic
