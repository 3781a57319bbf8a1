#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ccs/bipartite.hpp"
#include "ccs/qprob.hpp"

namespace ccs {

enum class SamplingMethod { HaarPure, GinibreMixed };

struct SamplerConfig {
  std::uint64_t seed = 42;
  std::size_t n_states = 1000;
  std::size_t n_event_pairs = 200;
  SamplingMethod method = SamplingMethod::GinibreMixed;

  void validate() const {
    if (n_states < 1 || n_event_pairs < 1) throw InvalidArgument("sampler counts must be at least 1");
  }
};

using Rng = std::mt19937_64;

// Independent stream labels; each draw is a pure function of (seed, stream, index).
enum class Stream : std::uint64_t {
  State = 1,
  PureState,
  MixedState,
  ProductPair,
  CommutingPair,
  Perturbation,
  Partition,
  Proposition,
  Golden,
  Roundtrip,
  Bounds
};

Rng stream_engine(std::uint64_t seed, Stream stream, std::uint64_t index);

Ket gaussian_ket(Index d, Rng& rng);
Ket haar_ket(Index d, Rng& rng);
Operator haar_unitary(Index d, Rng& rng);
DensityState ginibre_state(Index d, Rng& rng);
// Ginibre state supported on the span of the given orthonormal columns.
DensityState ginibre_state_on(const Operator& basis, Index d, Rng& rng);
Projection random_projection(Index d, Index rank, Rng& rng);
EventPair random_product_pair(const Bipartition& bp, Rng& rng);
// A, B diagonal in a common Haar-random basis, neither 0 nor I.
EventPair random_commuting_pair(Index d, Rng& rng);
Partition haar_atomic_partition(Index d, Rng& rng);

class Sampler {
 public:
  Sampler(SamplerConfig cfg, Index dim, std::optional<Bipartition> bp = std::nullopt);

  const SamplerConfig& config() const noexcept { return cfg_; }
  Index dim() const noexcept { return dim_; }

  DensityState state(std::size_t index) const;  // per cfg.method
  PureState pure_state(std::size_t index) const;
  DensityState mixed_state(std::size_t index) const;
  // Product-form when a bipartition is declared, otherwise a general commuting pair.
  EventPair pair(std::size_t index) const;
  EventPair product_pair(std::size_t index) const;
  EventPair commuting_pair(std::size_t index) const;

 private:
  SamplerConfig cfg_;
  Index dim_;
  std::optional<Bipartition> bp_;
};

}  // namespace ccs
