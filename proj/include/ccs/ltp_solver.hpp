#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ccs/qprob.hpp"

namespace ccs::ltp {

// Coefficients of the quadratic form [a b][[u v][v −u]][a b]ᵀ = 0 for the LTP state of the
// rotated product basis at angle θ.
struct UVCoefficients {
  double u = 0;
  double v = 0;
};

UVCoefficients uv_coefficients(double theta);
// Same coefficients from the longhand expansion, before trigonometric simplification.
UVCoefficients uv_coefficients_unsimplified(double theta);

struct LTPSolution {
  double theta = 0;
  double xi = 0;  // in [0, π]
  double a = 1;   // cos(ξ/2)
  double b = 0;   // sin(ξ/2)
  bool unique = true;  // false at θ ∈ πZ, where every (a, b) solves the system
};

struct SolverOptions {
  bool classical_limit = true;  // return the limit solution at θ ∈ πZ instead of throwing
};

LTPSolution solve_state_params(double theta, const SolverOptions& opts = {});

// Closed form a, b = √((1 ± 2cos³θ/√(1+3cos²θ))/2), valid on [0, π].
std::pair<double, double> closed_form_ab(double theta);

double quadratic_residual(double a, double b, double theta);

struct TransportedPair {
  Partition partition;
  DensityState state;
};

// The twisted family at θ with the state (a, b, b, a)/√2.
TransportedPair transport_by_V(const LTPSolution& sol, const Tolerance& tol = {});
// The untwisted family at θ with the state (a, b, b, −a)/√2.
TransportedPair untransported_pair(const LTPSolution& sol, const Tolerance& tol = {});

std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

using PlotRow = LTPSolution;

std::vector<PlotRow> plot_data(const std::vector<double>& theta_grid, const SolverOptions& opts = {});

struct ContinuityCheck {
  bool continuous = true;
  bool monotone = true;
  double max_jump = 0;
};

// Adjacent ξ jumps against 10× the grid spacing, and nondecreasing ξ.
ContinuityCheck check_continuity(const std::vector<PlotRow>& rows);

void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows);
std::vector<PlotRow> read_plot_csv(std::istream& in);

}  // namespace ccs::ltp
