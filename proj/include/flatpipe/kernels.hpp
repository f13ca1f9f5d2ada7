#pragma once

#include <cstddef>
#include <span>

namespace flatpipe::kernels {

/// Cell-centred 5-point stencil of the negative Laplacian on an nx × ny grid
/// with zero-flux (mirror ghost cell) boundaries. Fields are row-major with
/// i (x) fastest.
struct Stencil {
  int nx;
  int ny;
  double inv_dx2;
  double inv_dy2;

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
};

/// Straightforward single-threaded loops. Kept as the reference the OpenMP
/// kernels are tested and benchmarked against.
namespace serial {
void apply_neg_laplacian(const Stencil& s, std::span<const double> u, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_abs(std::span<const double> a);
double max_abs(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);  // y += alpha x
void xpby(std::span<const double> x, double beta, std::span<double> y);   // y = x + beta y
void add_scalar(double c, std::span<double> y);
}  // namespace serial

/// OpenMP versions. Reductions accumulate fixed-size blocks and then combine
/// the block partials in index order, so results are bit-identical for any
/// thread count.
namespace omp {
inline constexpr std::size_t kReductionBlock = 2048;

void apply_neg_laplacian(const Stencil& s, std::span<const double> u, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_abs(std::span<const double> a);
double max_abs(std::span<const double> a);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double beta, std::span<double> y);
void add_scalar(double c, std::span<double> y);
}  // namespace omp

}  // namespace flatpipe::kernels
