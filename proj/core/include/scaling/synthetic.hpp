#pragma once

#include <cstdint>

#include "scaling/dataset.hpp"

namespace scaling::synthetic {

// Every generator draws from std::mt19937_64 seeded with this value unless
// told otherwise; Gaussian noise comes from std::normal_distribution.
inline constexpr std::uint64_t kDefaultSeed = 20110301;

/// Metabolic-rate style data: log(s/W) = alpha + beta log(m/g) + N(0, sigma^2),
/// with m log-uniform between 10 g and 10^6 g.
DataSet kleiber(std::uint64_t seed = kDefaultSeed, std::size_t n = 60, double beta = 0.75, double sigma = 0.05,
                double alpha = -3.5);

/// Used-yacht style data: log(p/GBP) = ln 2 + beta log(l/ft) + delta age/yr + N(0, sigma^2),
/// length uniform on [20, 60] ft and age uniform on [0, 40] yr.
DataSet yachts(std::uint64_t seed = kDefaultSeed, std::size_t n = 80, double beta = 3.5, double delta = -0.03,
               double sigma = 0.3);

/// Noiseless log(s/W) = alpha + beta u + gamma u^2 with u = log(m/g) evenly spaced on [u_lo, u_hi].
DataSet quadratic_log(double alpha, double beta, double gamma, double u_lo, double u_hi, std::size_t n);

/// Random quadratic-in-log data with noise, for property checks.
DataSet random_quadratic(std::uint64_t seed, std::size_t n);

}  // namespace scaling::synthetic
