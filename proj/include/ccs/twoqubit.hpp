#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ccs/bipartite.hpp"
#include "ccs/qprob.hpp"

namespace ccs::twoqubit {

// Normalized vector of C^2 ⊗ C^2 with amplitudes ordered 00, 01, 10, 11.
class TwoQubitVector {
 public:
  explicit TwoQubitVector(const Ket& v, const Tolerance& tol = {});

  Complex amp(int i, int j) const { return v_(2 * i + j); }
  const Ket& ket() const noexcept { return v_; }

 private:
  Ket v_;
};

Ket basis(int i, int j);
Ket qubit_plus();   // (|0⟩+|1⟩)/√2
Ket qubit_minus();  // (−|0⟩+|1⟩)/√2
Ket product(const Ket& alpha, const Ket& beta);

// A = |00⟩⟨00|+|01⟩⟨01|, B = |00⟩⟨00|+|10⟩⟨10|
EventPair canonical_events();

Complex productness_determinant(const TwoQubitVector& v);
double screening_determinant(const TwoQubitVector& v);
Complex separability_determinant(const TwoQubitVector& psi);
double correlation_determinant(const TwoQubitVector& psi);
double concurrence_squared(const TwoQubitVector& psi);

enum class ConditionalMethod { Atomic, Pure, General };

struct ConditionalEntry {
  double probability = 0;
  std::optional<double> a;  // φ(A|C_k); empty when C_k has zero probability
  std::optional<double> b;  // φ(B|C_k)
};

struct ConditionalTable {
  ConditionalMethod method = ConditionalMethod::General;
  std::vector<ConditionalEntry> entries;
};

ConditionalTable conditional_probs_canonical(const DensityState& state, const Partition& partition,
                                             const Tolerance& tol = {});
ConditionalTable conditional_probs_canonical(const PureState& state, const Partition& partition,
                                             const Tolerance& tol = {});

struct Ltp2x2Result {
  bool holds = true;
  std::array<double, 4> residuals{};                  // diag(E(ρ)) − diag(ρ), ordered 00, 01, 10, 11
  std::optional<std::array<double, 4>> atomic_form;  // Σ_k q_k |⟨ij|γ_k⟩|² − ⟨ij|ρ|ij⟩ for atomic partitions
};

Ltp2x2Result ltp_check_2x2(const DensityState& state, const Partition& partition, const Tolerance& tol = {});

struct PerfectCorrParams {
  double r1 = 1;
  double r2 = 0;
  double r3 = 0;
};

DensityState perfect_correlation_state(const PerfectCorrParams& p, const Tolerance& tol = {});
PureState perfect_correlation_pure(Complex x, Complex y, const Tolerance& tol = {});

// V = Σ e^{iφ_ij}|ij⟩⟨ij|, phases ordered 00, 01, 10, 11.
Operator diagonal_unitary(const std::array<double, 4>& phases);

Partition nonproduct_from_product(const std::vector<TwoQubitVector>& products, const std::array<double, 4>& phases,
                                  const Tolerance& tol = {});

bool is_diagonal_computational(const Projection& c, const Tolerance& tol = {});

}  // namespace ccs::twoqubit
