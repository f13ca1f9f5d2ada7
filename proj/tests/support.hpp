#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "flatpipe/domain.hpp"
#include "flatpipe/elliptic.hpp"

namespace support {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

/// Random source with its mean removed (balanced up to rounding).
inline flatpipe::ScalarField balanced_source(const flatpipe::Grid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  flatpipe::ScalarField s = flatpipe::ScalarField::zeros(grid);
  double mean = 0.0;
  for (double& v : s.values) {
    v = u(rng);
    mean += v;
  }
  mean /= static_cast<double>(s.values.size());
  for (double& v : s.values) v -= mean;
  return s;
}

/// Uniform draw in [lo, hi].
inline double draw(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace support
