#include "ccs/sampler.hpp"

#include <algorithm>
#include <numeric>

namespace ccs {

Rng stream_engine(std::uint64_t seed, Stream stream, std::uint64_t index) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                    std::uint32_t(index), std::uint32_t(index >> 32)};
  return Rng(seq);
}

Ket gaussian_ket(Index d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Ket v(d);
  for (Index i = 0; i < d; ++i) v(i) = Complex(n(rng), n(rng));
  return v;
}

Ket haar_ket(Index d, Rng& rng) {
  Ket v = gaussian_ket(d, rng);
  return v / v.norm();
}

Operator haar_unitary(Index d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

DensityState ginibre_state(Index d, Rng& rng) {
  return ginibre_state_on(Operator::Identity(d, d), d, rng);
}

DensityState ginibre_state_on(const Operator& basis, Index d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const Index k = basis.cols();
  Operator g(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) g(i, j) = Complex(n(rng), n(rng));
  Operator rho = basis * (g * g.adjoint()) * basis.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  (void)d;
  return DensityState(rho);
}

Projection random_projection(Index d, Index rank, Rng& rng) {
  const Operator u = haar_unitary(d, rng);
  const Operator cols = u.leftCols(rank);
  return Projection(cols * cols.adjoint());
}

namespace {

Index random_rank(Index d, Rng& rng) {
  const Index hi = std::max<Index>(1, std::min<Index>(3, d - 1));
  std::uniform_int_distribution<Index> r(1, hi);
  return r(rng);
}

std::vector<int> nontrivial_pattern(Index d, Rng& rng) {
  std::bernoulli_distribution bit(0.5);
  std::vector<int> p(d);
  for (;;) {
    for (auto& x : p) x = bit(rng) ? 1 : 0;
    const int ones = std::accumulate(p.begin(), p.end(), 0);
    if (ones > 0 && ones < d) return p;
  }
}

}  // namespace

EventPair random_product_pair(const Bipartition& bp, Rng& rng) {
  const Projection p = random_projection(bp.d1, random_rank(bp.d1, rng), rng);
  const Projection q = random_projection(bp.d2, random_rank(bp.d2, rng), rng);
  const Operator a = kron<double>(p.op(), Operator::Identity(bp.d2, bp.d2));
  const Operator b = kron<double>(Operator::Identity(bp.d1, bp.d1), q.op());
  return EventPair(Projection(a), Projection(b));
}

EventPair random_commuting_pair(Index d, Rng& rng) {
  if (d < 2) throw InvalidArgument("commuting pairs need dim >= 2");
  const Operator u = haar_unitary(d, rng);
  const auto pa = nontrivial_pattern(d, rng);
  const auto pb = nontrivial_pattern(d, rng);
  Operator da = Operator::Zero(d, d), db = Operator::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    da(i, i) = pa[i];
    db(i, i) = pb[i];
  }
  return EventPair(Projection(u * da * u.adjoint()), Projection(u * db * u.adjoint()));
}

Partition haar_atomic_partition(Index d, Rng& rng) {
  const Operator u = haar_unitary(d, rng);
  std::vector<Ket> atoms;
  for (Index j = 0; j < d; ++j) atoms.push_back(u.col(j));
  return Partition::from_atoms(std::move(atoms));
}

Sampler::Sampler(SamplerConfig cfg, Index dim, std::optional<Bipartition> bp)
    : cfg_(cfg), dim_(dim), bp_(bp) {
  cfg_.validate();
  if (bp_ && bp_->dim() != dim_) throw DimensionMismatch("bipartition does not match the sampler dimension");
}

DensityState Sampler::state(std::size_t index) const {
  return cfg_.method == SamplingMethod::HaarPure ? DensityState::from_pure(pure_state(index)) : mixed_state(index);
}

PureState Sampler::pure_state(std::size_t index) const {
  auto rng = stream_engine(cfg_.seed, Stream::PureState, index);
  return PureState::normalized(gaussian_ket(dim_, rng));
}

DensityState Sampler::mixed_state(std::size_t index) const {
  auto rng = stream_engine(cfg_.seed, Stream::MixedState, index);
  return ginibre_state(dim_, rng);
}

EventPair Sampler::pair(std::size_t index) const { return bp_ ? product_pair(index) : commuting_pair(index); }

EventPair Sampler::product_pair(std::size_t index) const {
  if (!bp_) throw PreconditionViolated("product pairs need a bipartition");
  auto rng = stream_engine(cfg_.seed, Stream::ProductPair, index);
  return random_product_pair(*bp_, rng);
}

EventPair Sampler::commuting_pair(std::size_t index) const {
  auto rng = stream_engine(cfg_.seed, Stream::CommutingPair, index);
  return random_commuting_pair(dim_, rng);
}

}  // namespace ccs
