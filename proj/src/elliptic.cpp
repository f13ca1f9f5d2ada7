#include "flatpipe/elliptic.hpp"

#include <cmath>
#include <sstream>

#include "flatpipe/error.hpp"
#include "flatpipe/kernels.hpp"

namespace flatpipe {
namespace {

constexpr double kCompatibilityTol = 1e-10;

struct SerialOps {
  static void apply(const kernels::Stencil& s, std::span<const double> u, std::span<double> out) {
    kernels::serial::apply_neg_laplacian(s, u, out);
  }
  static double dot(std::span<const double> a, std::span<const double> b) { return kernels::serial::dot(a, b); }
  static double sum(std::span<const double> a) { return kernels::serial::sum(a); }
  static double sum_abs(std::span<const double> a) { return kernels::serial::sum_abs(a); }
  static void axpy(double a, std::span<const double> x, std::span<double> y) { kernels::serial::axpy(a, x, y); }
  static void xpby(std::span<const double> x, double b, std::span<double> y) { kernels::serial::xpby(x, b, y); }
  static void add_scalar(double c, std::span<double> y) { kernels::serial::add_scalar(c, y); }
};

struct OmpOps {
  static void apply(const kernels::Stencil& s, std::span<const double> u, std::span<double> out) {
    kernels::omp::apply_neg_laplacian(s, u, out);
  }
  static double dot(std::span<const double> a, std::span<const double> b) { return kernels::omp::dot(a, b); }
  static double sum(std::span<const double> a) { return kernels::omp::sum(a); }
  static double sum_abs(std::span<const double> a) { return kernels::omp::sum_abs(a); }
  static void axpy(double a, std::span<const double> x, std::span<double> y) { kernels::omp::axpy(a, x, y); }
  static void xpby(std::span<const double> x, double b, std::span<double> y) { kernels::omp::xpby(x, b, y); }
  static void add_scalar(double c, std::span<double> y) { kernels::omp::add_scalar(c, y); }
};

kernels::Stencil stencil_for(const Grid& g) {
  return {g.nx, g.ny, 1.0 / (g.dx * g.dx), 1.0 / (g.dy * g.dy)};
}

template <class Ops>
void project_mean(std::span<double> v) {
  Ops::add_scalar(-Ops::sum(v) / static_cast<double>(v.size()), v);
}

// r = b − A x, mean-projected; returns ‖r‖₂.
template <class Ops>
double true_residual(const kernels::Stencil& st, std::span<const double> b, std::span<const double> x,
                     std::span<double> r) {
  Ops::apply(st, x, r);
  Ops::xpby(b, -1.0, r);
  project_mean<Ops>(r);
  return std::sqrt(Ops::dot(r, r));
}

template <class Ops>
ScalarField solve_impl(const Grid& grid, const ScalarField& source, const SolverOptions& options,
                       SolveStats* stats) {
  const std::size_t n = grid.size();
  const std::span<const double> s(source.values);

  const double net = Ops::sum(s);
  const double gross = Ops::sum_abs(s);
  if (std::abs(net) > kCompatibilityTol * gross) {
    std::ostringstream msg;
    msg << "source integrates to " << net * grid.cell_area() << " (|s| integral "
        << gross * grid.cell_area() << "); a pure-Neumann problem needs a balanced source";
    throw Error(Errc::IncompatibleSource, "elliptic", msg.str());
  }

  ScalarField result = ScalarField::zeros(grid);
  result.mean_pinned = true;
  const double source_norm = std::sqrt(Ops::dot(s, s));
  if (stats) *stats = SolveStats{0, 0.0, source_norm};
  if (gross == 0.0) return result;

  const kernels::Stencil st = stencil_for(grid);
  const int max_iter = options.max_iter > 0 ? options.max_iter : 50 * (grid.nx + grid.ny);
  const double target = options.rel_tol * source_norm;

  // Solve (−Δ) x = −s̄ where s̄ is the compatible part of the source.
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = -s[k];
  project_mean<Ops>(b);

  std::vector<double>& x = result.values;
  std::vector<double> r = b;
  std::vector<double> p = r;
  std::vector<double> ap(n);
  double rr = Ops::dot(r, r);
  double res_norm = std::sqrt(rr);
  int it = 0;

  for (;;) {
    if (std::sqrt(rr) <= target) {
      // The recursively updated residual drifts; confirm against b − A x.
      res_norm = true_residual<Ops>(st, b, x, r);
      if (res_norm <= target) break;
      p = r;
      rr = Ops::dot(r, r);
    }
    if (it >= max_iter) break;

    Ops::apply(st, p, ap);
    const double pap = Ops::dot(p, ap);
    if (!(pap > 0.0)) break;
    const double alpha = rr / pap;
    Ops::axpy(alpha, p, x);
    Ops::axpy(-alpha, ap, r);
    project_mean<Ops>(r);
    const double rr_new = Ops::dot(r, r);
    Ops::xpby(r, rr_new / rr, p);
    rr = rr_new;
    ++it;
  }

  project_mean<Ops>(x);
  res_norm = true_residual<Ops>(st, b, x, r);
  if (stats) {
    stats->iterations = it;
    stats->residual_norm = res_norm;
  }
  if (!(res_norm <= target)) {
    std::ostringstream msg;
    msg << "residual " << res_norm << " above " << target << " after " << it << " iterations on "
        << grid.nx << "x" << grid.ny << " grid";
    throw Error(Errc::NoConvergence, "elliptic", msg.str());
  }
  return result;
}

}  // namespace

ScalarField solve_poisson_neumann(const Grid& grid, const ScalarField& source,
                                  const SolverOptions& options, SolveStats* stats) {
  if (source.values.size() != grid.size()) {
    throw Error(Errc::ShapeMismatch, "elliptic", "source does not match grid");
  }
  if (!(options.rel_tol > 0.0)) {
    throw Error(Errc::NonPositive, "elliptic", "relative tolerance must be positive");
  }
  if (options.backend == Backend::Serial) return solve_impl<SerialOps>(grid, source, options, stats);
  return solve_impl<OmpOps>(grid, source, options, stats);
}

std::vector<double> apply_laplacian(const Grid& grid, const std::vector<double>& u) {
  if (u.size() != grid.size()) {
    throw Error(Errc::ShapeMismatch, "elliptic", "field does not match grid");
  }
  std::vector<double> out(u.size());
  kernels::serial::apply_neg_laplacian(stencil_for(grid), u, out);
  for (double& v : out) v = -v;
  return out;
}

}  // namespace flatpipe
