#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ccs/bipartite.hpp"
#include "ccs/qprob.hpp"

namespace ccs::testing {

// Seeded generator independent of the library sampler.
template <typename Real = double>
class Gen {
 public:
  using Op = BasicOperator<Real>;
  using Vec = BasicKet<Real>;
  using C = std::complex<Real>;

  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Real uniform(Real lo = 0, Real hi = 1) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  C gauss() {
    std::normal_distribution<double> n;
    return C(Real(n(rng_)), Real(n(rng_)));
  }

  Vec ket(Index d) {
    Vec v(d);
    for (Index i = 0; i < d; ++i) v(i) = gauss();
    return v / v.norm();
  }

  Op ginibre(Index r, Index c) {
    Op g(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) g(i, j) = gauss();
    return g;
  }

  // Gram–Schmidt on Gaussian columns.
  Op unitary(Index d) {
    Op g = ginibre(d, d);
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < j; ++k) g.col(j) -= (g.col(k).adjoint() * g.col(j))(0, 0) * g.col(k);
      g.col(j) /= g.col(j).norm();
    }
    return g;
  }

  BasicDensityState<Real> state(Index d) {
    const Op g = ginibre(d, d);
    Op rho = g * g.adjoint();
    rho /= rho.trace().real();
    return BasicDensityState<Real>(Op((rho + rho.adjoint()) / Real(2)));
  }

  BasicProjection<Real> projection(Index d, Index rank) {
    const Op u = unitary(d);
    return BasicProjection<Real>(Op(u.leftCols(rank) * u.leftCols(rank).adjoint()));
  }

  // A and B diagonal in a shared random basis.
  BasicEventPair<Real> commuting_pair(Index d) {
    const Op u = unitary(d);
    Op a = Op::Zero(d, d), b = Op::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
      if (coin()) a += u.col(i) * u.col(i).adjoint();
      if (coin()) b += u.col(i) * u.col(i).adjoint();
    }
    return BasicEventPair<Real>(BasicProjection<Real>(a), BasicProjection<Real>(b));
  }

  BasicPartition<Real> atomic_partition(Index d) {
    const Op u = unitary(d);
    std::vector<Vec> atoms;
    for (Index i = 0; i < d; ++i) atoms.push_back(u.col(i));
    return BasicPartition<Real>::from_atoms(atoms);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Numerical rank from singular values.
template <typename Real>
Index svd_rank(const BasicOperator<Real>& m, Real threshold) {
  Eigen::JacobiSVD<BasicOperator<Real>> svd(m);
  Index r = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++r;
  return r;
}

// Rank of a projector from its eigenvalues.
inline Index eigen_rank(const Operator& p) {
  Eigen::SelfAdjointEigenSolver<Operator> es(p, Eigen::EigenvaluesOnly);
  return (es.eigenvalues().array() > 0.5).count();
}

inline Ket ket4(Complex a, Complex b, Complex c, Complex d) {
  Ket v(4);
  v << a, b, c, d;
  return v;
}

inline Ket bell0() { return ket4(M_SQRT1_2, 0, 0, M_SQRT1_2); }

}  // namespace ccs::testing
