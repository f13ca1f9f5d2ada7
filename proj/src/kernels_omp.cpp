#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "flatpipe/kernels.hpp"

namespace flatpipe::kernels::omp {
namespace {

// Deterministic reduction: each block is summed sequentially by whichever
// thread owns it, then the partials are combined in block order.
template <class BlockFn>
double blocked_reduce(std::size_t n, BlockFn&& block_value) {
  const std::size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
  if (nblocks <= 1) return n == 0 ? 0.0 : block_value(std::size_t{0}, n);

  std::vector<double> partial(nblocks);
  const auto nb = static_cast<std::int64_t>(nblocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    partial[static_cast<std::size_t>(b)] = block_value(lo, hi);
  }
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

}  // namespace

void apply_neg_laplacian(const Stencil& s, std::span<const double> u, std::span<double> out) {
  const int nx = s.nx;
  const int ny = s.ny;
  const double* up = u.data();
  double* op = out.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    const double* row = up + static_cast<std::size_t>(j) * nx;
    const double* below = j > 0 ? row - nx : nullptr;
    const double* above = j < ny - 1 ? row + nx : nullptr;
    double* orow = op + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      const double c = row[i];
      double fx = 0.0;
      double fy = 0.0;
      if (i > 0) fx += c - row[i - 1];
      if (i < nx - 1) fx += c - row[i + 1];
      if (below) fy += c - below[i];
      if (above) fy += c - above[i];
      orow[i] = fx * s.inv_dx2 + fy * s.inv_dy2;
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += a[k] * b[k];
    return acc;
  });
}

double sum(std::span<const double> a) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += a[k];
    return acc;
  });
}

double sum_abs(std::span<const double> a) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += std::abs(a[k]);
    return acc;
  });
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static) reduction(max : m)
  for (std::int64_t k = 0; k < n; ++k) m = std::max(m, std::abs(a[static_cast<std::size_t>(k)]));
  return m;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) y[static_cast<std::size_t>(k)] += alpha * x[static_cast<std::size_t>(k)];
}

void xpby(std::span<const double> x, double beta, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    y[i] = x[i] + beta * y[i];
  }
}

void add_scalar(double c, std::span<double> y) {
  const auto n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) y[static_cast<std::size_t>(k)] += c;
}

}  // namespace flatpipe::kernels::omp
