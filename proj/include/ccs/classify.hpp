#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/bipartite.hpp"
#include "ccs/qprob.hpp"
#include "ccs/sampler.hpp"

namespace ccs {

enum class ProductClass { AllProduct, SomeNonproduct, NotApplicable };
enum class Triviality { Strong, Weak, Nontrivial, NotACCS };
enum class Determinism { Yes, No, NotACCS };
enum class CertificateKind { Analytic, Sampled };

std::string_view to_string(ProductClass p);
std::string_view to_string(Triviality t);
std::string_view to_string(Determinism d);
std::string_view to_string(CertificateKind k);
std::string_view to_string(SamplingMethod m);

// A state (and optionally partition and events) that breaks a claimed property.
struct Witness {
  std::string reason;
  Operator state;
  std::vector<Operator> partition;  // empty when it is the partition under test
  std::optional<Operator> A;        // empty when it is the pair under test
  std::optional<Operator> B;
};

struct Certificate {
  CertificateKind kind = CertificateKind::Analytic;
  std::string mechanism;
  std::uint64_t seed = 0;   // Sampled only
  std::size_t samples = 0;  // Sampled only
};

struct TrivialityResult {
  Triviality level = Triviality::Weak;
  Certificate certificate;
  std::vector<Witness> counterexamples;
};

struct ClassifyOptions {
  Tolerance tol{};
  // Tensor structure for product tests; 2×2 is assumed on dimension 4 when absent.
  std::optional<Bipartition> bipartition;
  bool assume_two_qubits = true;

  std::optional<Bipartition> resolve_bipartition(Index dim) const;
};

struct CCSReport {
  bool is_ccs = false;
  std::vector<Index> rank_profile;
  bool atomic = false;
  CommutationClass commutation = CommutationClass::Commuting;
  ProductClass product = ProductClass::NotApplicable;
  Triviality triviality = Triviality::NotACCS;
  std::optional<Certificate> certificate;
  bool ltp = false;
  std::array<double, 4> ltp_residuals{};
  Determinism deterministic = Determinism::NotACCS;
  CorrelationClass correlation_class = CorrelationClass::Uncorrelated;
  std::vector<std::size_t> zero_probability_elements;
  std::vector<Witness> counterexamples;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
};

ProductClass product_class(const Partition& part, const std::optional<Bipartition>& bp, const Tolerance& tol = {});

// Every element lies under A, A⊥, B or B⊥.
bool is_event_refinement(const Partition& part, const EventPair& pair, const Tolerance& tol = {});

// Every atom screens off the correlation in its own pure state.
bool atoms_screen(const Partition& part, const EventPair& pair, const Tolerance& tol = {});

TrivialityResult certify_triviality(const Partition& part, const EventPair& pair, const DensityState& state,
                                    const SamplerConfig& cfg, const ClassifyOptions& opts = {});

CCSReport classify(const Partition& part, const EventPair& pair, const DensityState& state,
                   const SamplerConfig& cfg = {}, const ClassifyOptions& opts = {});

// ---------------------------------------------------------------------------
// Randomized verification of the structural propositions

struct PropositionResult {
  std::string name;
  std::string strategy;
  std::size_t instances = 0;
  std::size_t hypotheses_met = 0;
  std::size_t violations = 0;
  std::vector<Witness> counterexamples;  // first few violations
};

struct ContrastResult {
  bool ccs = false;
  bool noncommuting = false;
  bool ltp = false;
  bool deterministic = false;

  bool confirmed() const { return ccs && noncommuting && ltp && deterministic; }
};

struct PropositionReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<PropositionResult> results;
  ContrastResult contrast;

  bool all_passed() const;
};

struct PropositionOptions {
  Tolerance tol{};
  // Test fixture: inverts the atomicity hypothesis of the atomic-LTP commutation check.
  bool invert_atomicity = false;
  std::size_t max_counterexamples = 5;
};

// Runs cfg.n_states instances per proposition.
PropositionReport verify_propositions(const SamplerConfig& cfg, const PropositionOptions& opts = {});

}  // namespace ccs
