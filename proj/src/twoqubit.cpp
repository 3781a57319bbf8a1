#include "ccs/twoqubit.hpp"

#include <cmath>

namespace ccs::twoqubit {

namespace {

void require_dim4(Index d, const char* what) {
  if (d != 4) throw DimensionMismatch(std::string(what) + ": two-qubit operations need dim 4");
}

// |⟨ij|v⟩|² weights of A and B.
double weight_A(const Ket& v) { return std::norm(v(0)) + std::norm(v(1)); }
double weight_B(const Ket& v) { return std::norm(v(0)) + std::norm(v(2)); }

}  // namespace

TwoQubitVector::TwoQubitVector(const Ket& v, const Tolerance& tol) : v_(v) {
  require_dim4(v.size(), "TwoQubitVector");
  if (!v.allFinite()) throw InvalidArgument("TwoQubitVector has non-finite amplitudes");
  if (std::abs(v.norm() - 1.0) > tol.eps_eq) throw NormalizationViolation("TwoQubitVector is not normalized");
}

Ket basis(int i, int j) {
  Ket v = Ket::Zero(4);
  v(2 * i + j) = 1;
  return v;
}

Ket qubit_plus() {
  Ket v(2);
  v << M_SQRT1_2, M_SQRT1_2;
  return v;
}

Ket qubit_minus() {
  Ket v(2);
  v << -M_SQRT1_2, M_SQRT1_2;
  return v;
}

Ket product(const Ket& alpha, const Ket& beta) { return kron<double>(alpha, beta); }

EventPair canonical_events() {
  Operator a = Operator::Zero(4, 4);
  Operator b = Operator::Zero(4, 4);
  a(0, 0) = a(1, 1) = 1;
  b(0, 0) = b(2, 2) = 1;
  return EventPair(Projection(a), Projection(b));
}

Complex productness_determinant(const TwoQubitVector& v) {
  return v.amp(0, 0) * v.amp(1, 1) - v.amp(0, 1) * v.amp(1, 0);
}

double screening_determinant(const TwoQubitVector& v) {
  return std::norm(v.amp(0, 0)) * std::norm(v.amp(1, 1)) - std::norm(v.amp(0, 1)) * std::norm(v.amp(1, 0));
}

Complex separability_determinant(const TwoQubitVector& psi) { return productness_determinant(psi); }

double correlation_determinant(const TwoQubitVector& psi) { return screening_determinant(psi); }

double concurrence_squared(const TwoQubitVector& psi) { return 4.0 * std::norm(separability_determinant(psi)); }

namespace {

ConditionalTable atomic_table(const Operator& rho, const Partition& partition, const Tolerance& tol) {
  ConditionalTable t;
  t.method = ConditionalMethod::Atomic;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const Ket g = partition.atom(k);
    ConditionalEntry e;
    e.probability = (g.adjoint() * rho * g)(0, 0).real();
    if (e.probability > tol.eps_prob) {
      e.a = weight_A(g);
      e.b = weight_B(g);
    }
    t.entries.push_back(e);
  }
  return t;
}

ConditionalTable pure_table(const Ket& psi, const Partition& partition, const Tolerance& tol) {
  ConditionalTable t;
  t.method = ConditionalMethod::Pure;
  for (const auto& c : partition) {
    const Ket pk = c.op() * psi;
    ConditionalEntry e;
    e.probability = pk.squaredNorm();
    if (e.probability > tol.eps_prob) {
      e.a = weight_A(pk) / e.probability;
      e.b = weight_B(pk) / e.probability;
    }
    t.entries.push_back(e);
  }
  return t;
}

ConditionalTable general_table(const DensityState& state, const Partition& partition, const Tolerance& tol) {
  ConditionalTable t;
  t.method = ConditionalMethod::General;
  const EventPair ab = canonical_events();
  for (const auto& c : partition) {
    ConditionalEntry e;
    e.probability = detail::trace_product<double>(state.rho(), c.op()).real();
    if (e.probability > tol.eps_prob) {
      e.a = conditional_probability(state, ab.A(), c, tol);
      e.b = conditional_probability(state, ab.B(), c, tol);
    }
    t.entries.push_back(e);
  }
  return t;
}

}  // namespace

ConditionalTable conditional_probs_canonical(const DensityState& state, const Partition& partition,
                                             const Tolerance& tol) {
  require_dim4(state.dim(), "conditional_probs_canonical");
  require_dim4(partition.dim(), "conditional_probs_canonical");
  if (partition.is_atomic()) return atomic_table(state.rho(), partition, tol);
  if (state.is_pure(tol)) return pure_table(state.dominant_vector(), partition, tol);
  return general_table(state, partition, tol);
}

ConditionalTable conditional_probs_canonical(const PureState& state, const Partition& partition,
                                             const Tolerance& tol) {
  require_dim4(state.dim(), "conditional_probs_canonical");
  require_dim4(partition.dim(), "conditional_probs_canonical");
  if (partition.is_atomic()) return atomic_table(state.vector() * state.vector().adjoint(), partition, tol);
  return pure_table(state.vector(), partition, tol);
}

Ltp2x2Result ltp_check_2x2(const DensityState& state, const Partition& partition, const Tolerance& tol) {
  require_dim4(state.dim(), "ltp_check_2x2");
  require_dim4(partition.dim(), "ltp_check_2x2");
  const Operator e_rho = conditional_expectation(partition, state.rho());
  Ltp2x2Result out;
  for (int i = 0; i < 4; ++i) {
    out.residuals[i] = e_rho(i, i).real() - state.rho()(i, i).real();
    out.holds = out.holds && std::abs(out.residuals[i]) <= tol.eps_eq;
  }
  if (partition.is_atomic()) {
    std::array<double, 4> r{};
    for (std::size_t k = 0; k < partition.size(); ++k) {
      const Ket g = partition.atom(k);
      const double q = (g.adjoint() * state.rho() * g)(0, 0).real();
      for (int i = 0; i < 4; ++i) r[i] += q * std::norm(g(i));
    }
    for (int i = 0; i < 4; ++i) r[i] -= state.rho()(i, i).real();
    out.atomic_form = r;
  }
  return out;
}

DensityState perfect_correlation_state(const PerfectCorrParams& p, const Tolerance& tol) {
  const double r2sum = p.r1 * p.r1 + p.r2 * p.r2 + p.r3 * p.r3;
  if (!std::isfinite(r2sum) || r2sum > 1 + tol.eps_eq)
    throw DomainError("perfect-correlation parameters need r1²+r2²+r3² ≤ 1");
  Operator rho = Operator::Zero(4, 4);
  rho(0, 0) = 0.5 * (1 + p.r3);
  rho(0, 3) = 0.5 * Complex(p.r1, -p.r2);
  rho(3, 0) = 0.5 * Complex(p.r1, p.r2);
  rho(3, 3) = 0.5 * (1 - p.r3);
  return DensityState(rho, tol);
}

PureState perfect_correlation_pure(Complex x, Complex y, const Tolerance& tol) {
  if (std::abs(std::norm(x) + std::norm(y) - 1) > tol.eps_eq)
    throw NormalizationViolation("perfect-correlation amplitudes need |x|²+|y|² = 1");
  Ket v = Ket::Zero(4);
  v(0) = x;
  v(3) = y;
  return PureState(v, tol);
}

Operator diagonal_unitary(const std::array<double, 4>& phases) {
  Operator v = Operator::Zero(4, 4);
  for (int i = 0; i < 4; ++i) v(i, i) = std::polar(1.0, phases[i]);
  return v;
}

Partition nonproduct_from_product(const std::vector<TwoQubitVector>& products, const std::array<double, 4>& phases,
                                  const Tolerance& tol) {
  if (products.size() != 4) throw PreconditionViolated("need four product vectors");
  const Complex twist = std::polar(1.0, phases[0] + phases[3] - phases[1] - phases[2]);
  if (std::abs(twist - 1.0) <= tol.eps_eq)
    throw PreconditionViolated("phases give a product diagonal unitary (φ00+φ11 = φ01+φ10)");
  for (const auto& g : products) {
    if (std::abs(productness_determinant(g)) > tol.eps_eq) throw PreconditionViolated("input vector is not a product");
    for (int i = 0; i < 4; ++i)
      if (std::abs(g.ket()(i)) <= tol.eps_eq) throw PreconditionViolated("input vector has a vanishing amplitude");
  }
  const Operator v = diagonal_unitary(phases);
  std::vector<Ket> out;
  for (const auto& g : products) out.push_back(v * g.ket());
  return Partition::from_atoms(std::move(out), tol);
}

bool is_diagonal_computational(const Projection& c, const Tolerance& tol) {
  require_dim4(c.dim(), "is_diagonal_computational");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && std::abs(c.op()(i, j)) > tol.eps_eq) return false;
  return true;
}

}  // namespace ccs::twoqubit
