#include <algorithm>
#include <cmath>

#include "flatpipe/kernels.hpp"

namespace flatpipe::kernels::serial {

void apply_neg_laplacian(const Stencil& s, std::span<const double> u, std::span<double> out) {
  const int nx = s.nx;
  const int ny = s.ny;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      const double c = u[k];
      double fx = 0.0;
      double fy = 0.0;
      if (i > 0) fx += c - u[k - 1];
      if (i < nx - 1) fx += c - u[k + 1];
      if (j > 0) fy += c - u[k - nx];
      if (j < ny - 1) fy += c - u[k + nx];
      out[k] = fx * s.inv_dx2 + fy * s.inv_dy2;
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

double sum(std::span<const double> a) {
  double acc = 0.0;
  for (double v : a) acc += v;
  return acc;
}

double sum_abs(std::span<const double> a) {
  double acc = 0.0;
  for (double v : a) acc += std::abs(v);
  return acc;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] += alpha * x[k];
}

void xpby(std::span<const double> x, double beta, std::span<double> y) {
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = x[k] + beta * y[k];
}

void add_scalar(double c, std::span<double> y) {
  for (double& v : y) v += c;
}

}  // namespace flatpipe::kernels::serial
