#include "ccs/ltp_solver.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ccs/families.hpp"

namespace ccs::ltp {

namespace {

constexpr double kDegenerateSin = 8 * std::numeric_limits<double>::epsilon();

}  // namespace

UVCoefficients uv_coefficients(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {-0.5 * s * s * (1 + 2 * c * c), c * c * c * s};
}

UVCoefficients uv_coefficients_unsimplified(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double s2 = s * s, c2 = c * c;
  return {c2 * 0.5 * (1 + c2) + 0.5 * s2 * s2 - 1, c * s * (0.5 * (1 + c2) - 0.5 * s2)};
}

std::pair<double, double> closed_form_ab(double theta) {
  const double c = std::cos(theta);
  const double k = 2 * c * c * c / std::sqrt(1 + 3 * c * c);
  return {std::sqrt(std::max(0.0, (1 + k) / 2)), std::sqrt(std::max(0.0, (1 - k) / 2))};
}

LTPSolution solve_state_params(double theta, const SolverOptions& opts) {
  if (!std::isfinite(theta)) throw DomainError("theta is not finite");
  LTPSolution sol;
  sol.theta = theta;
  if (std::abs(std::sin(theta)) <= kDegenerateSin) {
    if (!opts.classical_limit) throw DegenerateTheta("theta in πZ: every (a, b) solves the LTP system");
    const bool up = std::cos(theta) > 0;
    sol.xi = up ? 0.0 : M_PI;
    sol.a = up ? 1.0 : 0.0;
    sol.b = up ? 0.0 : 1.0;
    sol.unique = false;
    return sol;
  }
  const auto [u, v] = uv_coefficients(theta);
  const double n = std::hypot(u, v);
  const double cos_xi = v / n;
  const double sin_xi = -u / n;
  sol.xi = std::atan2(sin_xi, cos_xi);
  sol.a = std::sqrt(std::max(0.0, (1 + cos_xi) / 2));
  sol.b = std::sqrt(std::max(0.0, (1 - cos_xi) / 2));
  return sol;
}

double quadratic_residual(double a, double b, double theta) {
  const auto [u, v] = uv_coefficients(theta);
  return std::abs(u * (a * a - b * b) + 2 * v * a * b);
}

TransportedPair transport_by_V(const LTPSolution& sol, const Tolerance& tol) {
  families::FamilyParams p = families::FamilyParams::with_theta(sol.theta);
  auto inst = families::generate(families::FamilyId::CCStwist, p, tol);
  return {std::move(inst.partition), DensityState::from_pure(families::twist_ltp_state(sol.a, sol.b))};
}

TransportedPair untransported_pair(const LTPSolution& sol, const Tolerance& tol) {
  families::FamilyParams p = families::FamilyParams::with_theta(sol.theta);
  auto inst = families::generate(families::FamilyId::CCSclassU, p, tol);
  return {std::move(inst.partition), DensityState::from_pure(families::classU_ltp_state(sol.a, sol.b))};
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw InvalidArgument("grid needs at least two points");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * double(i) / double(n - 1);
  g.back() = hi;
  return g;
}

std::vector<PlotRow> plot_data(const std::vector<double>& theta_grid, const SolverOptions& opts) {
  std::vector<PlotRow> rows;
  rows.reserve(theta_grid.size());
  for (double t : theta_grid) rows.push_back(solve_state_params(t, opts));
  return rows;
}

ContinuityCheck check_continuity(const std::vector<PlotRow>& rows) {
  ContinuityCheck c;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double dt = std::abs(rows[i].theta - rows[i - 1].theta);
    const double jump = std::abs(rows[i].xi - rows[i - 1].xi);
    c.max_jump = std::max(c.max_jump, jump);
    if (jump > 10 * dt) c.continuous = false;
    if ((rows[i].xi - rows[i - 1].xi) * (rows[i].theta - rows[i - 1].theta) < 0) c.monotone = false;
  }
  return c;
}

void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows) {
  std::ostringstream s;
  s.precision(17);
  s << "theta,xi,a,b\n";
  for (const auto& r : rows) s << r.theta << ',' << r.xi << ',' << r.a << ',' << r.b << '\n';
  out << s.str();
}

std::vector<PlotRow> read_plot_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "theta,xi,a,b") throw InvalidArgument("plot CSV: bad header");
  std::vector<PlotRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    PlotRow r;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> r.theta >> c1 >> r.xi >> c2 >> r.a >> c3 >> r.b) || c1 != ',' || c2 != ',' || c3 != ',')
      throw InvalidArgument("plot CSV: malformed row at line " + std::to_string(lineno));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ccs::ltp
