#pragma once

#include "ccs/qprob.hpp"

namespace ccs {

// Tensor factorization H = C^d1 ⊗ C^d2 with index i*d2 + j for |i⟩⊗|j⟩.
struct Bipartition {
  Index d1 = 2;
  Index d2 = 2;

  Index dim() const noexcept { return d1 * d2; }
};

template <typename Real>
BasicOperator<Real> kron(const BasicOperator<Real>& x, const BasicOperator<Real>& y) {
  BasicOperator<Real> out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

template <typename Real>
BasicKet<Real> kron(const BasicKet<Real>& x, const BasicKet<Real>& y) {
  BasicKet<Real> out(x.size() * y.size());
  for (Index i = 0; i < x.size(); ++i) out.segment(i * y.size(), y.size()) = x(i) * y;
  return out;
}

// Amplitude matrix M_ij = ⟨ij|v⟩.
template <typename Real>
BasicOperator<Real> amplitude_matrix(const BasicKet<Real>& v, const Bipartition& bp) {
  detail::require_same_dim<Real>(v.size(), bp.dim(), "amplitude_matrix");
  BasicOperator<Real> m(bp.d1, bp.d2);
  for (Index i = 0; i < bp.d1; ++i)
    for (Index j = 0; j < bp.d2; ++j) m(i, j) = v(i * bp.d2 + j);
  return m;
}

// Product iff every 2×2 minor of the amplitude matrix vanishes; for two qubits this is the
// single determinant ⟨00|v⟩⟨11|v⟩ − ⟨01|v⟩⟨10|v⟩.
template <typename Real>
Real max_product_minor(const BasicKet<Real>& v, const Bipartition& bp) {
  const BasicOperator<Real> m = amplitude_matrix(v, bp);
  Real worst = 0;
  for (Index i = 0; i < bp.d1; ++i)
    for (Index k = i + 1; k < bp.d1; ++k)
      for (Index j = 0; j < bp.d2; ++j)
        for (Index l = j + 1; l < bp.d2; ++l) worst = std::max(worst, std::abs(m(i, j) * m(k, l) - m(i, l) * m(k, j)));
  return worst;
}

template <typename Real>
bool is_product_vector(const BasicKet<Real>& v, const Bipartition& bp, Real eps) {
  return max_product_minor(v, bp) <= eps;
}

// Reduced operator Tr_2(X)/d2, i.e. the P with X = P ⊗ I when X is local on the first factor.
template <typename Real>
BasicOperator<Real> first_factor(const BasicOperator<Real>& x, const Bipartition& bp) {
  BasicOperator<Real> p = BasicOperator<Real>::Zero(bp.d1, bp.d1);
  for (Index i = 0; i < bp.d1; ++i)
    for (Index k = 0; k < bp.d1; ++k)
      for (Index j = 0; j < bp.d2; ++j) p(i, k) += x(i * bp.d2 + j, k * bp.d2 + j);
  return p / Real(bp.d2);
}

template <typename Real>
BasicOperator<Real> second_factor(const BasicOperator<Real>& x, const Bipartition& bp) {
  BasicOperator<Real> q = BasicOperator<Real>::Zero(bp.d2, bp.d2);
  for (Index j = 0; j < bp.d2; ++j)
    for (Index l = 0; l < bp.d2; ++l)
      for (Index i = 0; i < bp.d1; ++i) q(j, l) += x(i * bp.d2 + j, i * bp.d2 + l);
  return q / Real(bp.d1);
}

template <typename Real>
bool is_local_first(const BasicOperator<Real>& x, const Bipartition& bp, Real eps) {
  const BasicOperator<Real> p = first_factor(x, bp);
  return detail::approx_equal<Real>(kron<Real>(p, BasicOperator<Real>::Identity(bp.d2, bp.d2)), x, eps);
}

template <typename Real>
bool is_local_second(const BasicOperator<Real>& x, const Bipartition& bp, Real eps) {
  const BasicOperator<Real> q = second_factor(x, bp);
  return detail::approx_equal<Real>(kron<Real>(BasicOperator<Real>::Identity(bp.d1, bp.d1), q), x, eps);
}

// A = P⊗I and B = I⊗Q, or the other way round.
template <typename Real>
bool is_local_pair(const BasicEventPair<Real>& pair, const Bipartition& bp, Real eps) {
  if (pair.dim() != bp.dim()) return false;
  const auto& a = pair.A().op();
  const auto& b = pair.B().op();
  return (is_local_first(a, bp, eps) && is_local_second(b, bp, eps)) ||
         (is_local_second(a, bp, eps) && is_local_first(b, bp, eps));
}

}  // namespace ccs
