#pragma once

#include <vector>

#include "flatpipe/domain.hpp"

namespace flatpipe {

/// Per-cell scalar aligned with a Grid (row-major, i fastest).
struct ScalarField {
  Grid grid;
  std::vector<double> values;
  bool mean_pinned = false;  // set once the zero-mean gauge has been applied

  static ScalarField zeros(const Grid& grid) {
    return ScalarField{grid, std::vector<double>(grid.size(), 0.0), false};
  }
};

enum class Backend { Serial, OpenMP };

struct SolverOptions {
  double rel_tol = 1e-10;
  int max_iter = 0;  // 0 selects 50·(nx + ny)
  Backend backend = Backend::OpenMP;
};

struct SolveStats {
  int iterations = 0;
  double residual_norm = 0.0;  // ‖Δu − s̄‖₂ of the returned field
  double source_norm = 0.0;    // ‖s‖₂
};

/// Solves the pure-Neumann Poisson problem Δu = s on a uniform cell-centred
/// grid (5-point stencil, mirror ghost cells) by conjugate gradients on the
/// semi-definite operator −Δ with the constant null space projected out.
///
/// The source must be compatible, |Σ s| ≤ 1e-10·Σ|s|, otherwise
/// IncompatibleSource is thrown. Its residual mean is projected away before
/// iterating, and the returned field has zero mean. NoConvergence is thrown
/// if ‖Δu − s̄‖₂ > rel_tol·‖s‖₂ after max_iter iterations.
ScalarField solve_poisson_neumann(const Grid& grid, const ScalarField& source,
                                  const SolverOptions& options = {},
                                  SolveStats* stats = nullptr);

/// Discrete Laplacian Δu with the same stencil the solver inverts.
std::vector<double> apply_laplacian(const Grid& grid, const std::vector<double>& u);

}  // namespace flatpipe
