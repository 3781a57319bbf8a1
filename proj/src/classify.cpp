#include "ccs/classify.hpp"

#include <algorithm>

namespace ccs {

std::string_view to_string(ProductClass p) {
  switch (p) {
    case ProductClass::AllProduct: return "AllProduct";
    case ProductClass::SomeNonproduct: return "SomeNonproduct";
    case ProductClass::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string_view to_string(Triviality t) {
  switch (t) {
    case Triviality::Strong: return "Strong";
    case Triviality::Weak: return "Weak";
    case Triviality::Nontrivial: return "Nontrivial";
    case Triviality::NotACCS: return "NotACCS";
  }
  return "?";
}

std::string_view to_string(Determinism d) {
  switch (d) {
    case Determinism::Yes: return "Yes";
    case Determinism::No: return "No";
    case Determinism::NotACCS: return "NotACCS";
  }
  return "?";
}

std::string_view to_string(CertificateKind k) { return k == CertificateKind::Analytic ? "Analytic" : "Sampled"; }

std::string_view to_string(SamplingMethod m) { return m == SamplingMethod::HaarPure ? "HaarPure" : "GinibreMixed"; }

std::optional<Bipartition> ClassifyOptions::resolve_bipartition(Index dim) const {
  if (bipartition) {
    if (bipartition->dim() != dim) throw DimensionMismatch("bipartition does not match the partition dimension");
    return bipartition;
  }
  if (assume_two_qubits && dim == 4) return Bipartition{2, 2};
  return std::nullopt;
}

ProductClass product_class(const Partition& part, const std::optional<Bipartition>& bp, const Tolerance& tol) {
  if (!bp || !part.is_atomic()) return ProductClass::NotApplicable;
  for (std::size_t k = 0; k < part.size(); ++k)
    if (!is_product_vector(part.atom(k), *bp, tol.eps_eq)) return ProductClass::SomeNonproduct;
  return ProductClass::AllProduct;
}

bool is_event_refinement(const Partition& part, const EventPair& pair, const Tolerance& tol) {
  const Operator& a = pair.A().op();
  const Operator& b = pair.B().op();
  const Operator id = Operator::Identity(part.dim(), part.dim());
  const std::array<Operator, 4> events{a, id - a, b, id - b};
  return std::all_of(part.begin(), part.end(), [&](const Projection& c) {
    return std::any_of(events.begin(), events.end(),
                       [&](const Operator& x) { return detail::approx_equal<double>(x * c.op(), c.op(), tol.eps_eq); });
  });
}

bool atoms_screen(const Partition& part, const EventPair& pair, const Tolerance& tol) {
  if (!part.is_atomic()) return false;
  const Operator& a = pair.A().op();
  const Operator& b = pair.B().op();
  for (std::size_t k = 0; k < part.size(); ++k) {
    const Ket g = part.atom(k);
    const double pa = g.dot(a * g).real();
    const double pb = g.dot(b * g).real();
    const double pab = g.dot(a * (b * g)).real();
    if (std::abs(pab - pa * pb) > tol.eps_eq) return false;
  }
  return true;
}

namespace {

bool is_diagonal(const Operator& x, double eps) {
  Operator off = x;
  off.diagonal().setZero();
  return detail::approx_zero<double>(off, eps);
}

bool is_classical(const Partition& part, const EventPair& pair, double eps) {
  return is_diagonal(pair.A().op(), eps) && is_diagonal(pair.B().op(), eps) &&
         std::all_of(part.begin(), part.end(), [&](const Projection& c) { return is_diagonal(c.op(), eps); });
}

DensityState reference_draw(const SamplerConfig& cfg, Index d, Stream stream, std::uint64_t index) {
  auto rng = stream_engine(cfg.seed, stream, index);
  if (cfg.method == SamplingMethod::HaarPure) return DensityState::from_pure(haar_ket(d, rng));
  return ginibre_state(d, rng);
}

Witness screening_witness(std::string reason, const DensityState& s) { return Witness{std::move(reason), s.rho(), {}, {}, {}}; }

}  // namespace

TrivialityResult certify_triviality(const Partition& part, const EventPair& pair, const DensityState& state,
                                    const SamplerConfig& cfg, const ClassifyOptions& opts) {
  cfg.validate();
  const Tolerance& tol = opts.tol;
  if (!is_ccs(state, part, pair, tol).is_ccs) throw PreconditionViolated("triviality needs a CCS for the given state");
  const Index d = part.dim();
  const auto bp = opts.resolve_bipartition(d);

  TrivialityResult out;
  if (part.is_atomic()) {
    if (bp && product_class(part, bp, tol) == ProductClass::AllProduct && is_local_pair(pair, *bp, tol.eps_eq)) {
      out.level = Triviality::Strong;
      out.certificate = {CertificateKind::Analytic, "product-atomic partition with local events", 0, 0};
      return out;
    }
    if (is_classical(part, pair, tol.eps_eq)) {
      out.level = Triviality::Strong;
      out.certificate = {CertificateKind::Analytic, "classical atomic partition and events", 0, 0};
      return out;
    }
  }

  const Sampler sampler(cfg, d, bp);
  out.level = Triviality::Weak;
  if (is_event_refinement(part, pair, tol)) {
    out.certificate = {CertificateKind::Analytic, "every element lies under A, A⊥, B or B⊥", 0, 0};
  } else if (atoms_screen(part, pair, tol)) {
    out.certificate = {CertificateKind::Analytic, "atomic screening determinant", 0, 0};
  } else {
    // Perturbed reference states first, then fresh draws.
    std::size_t count = 0;
    const std::size_t per_weight = std::max<std::size_t>(1, cfg.n_states / 10);
    const std::array<double, 3> weights{0.5, 0.1, 0.01};
    for (std::size_t w = 0; w < weights.size(); ++w) {
      for (std::size_t i = 0; i < per_weight; ++i) {
        auto rng = stream_engine(cfg.seed, Stream::Perturbation, w * per_weight + i);
        const DensityState s = DensityState::mixture(weights[w], ginibre_state(d, rng), state);
        ++count;
        if (!is_ccs(s, part, pair, tol).is_ccs) {
          out.level = Triviality::Nontrivial;
          out.certificate = {CertificateKind::Sampled, "perturbed state breaks screening", cfg.seed, count};
          out.counterexamples.push_back(screening_witness("perturbed state breaks screening", s));
          return out;
        }
      }
    }
    for (std::size_t i = 0; i < cfg.n_states; ++i) {
      const DensityState s = sampler.state(i);
      ++count;
      if (!is_ccs(s, part, pair, tol).is_ccs) {
        out.level = Triviality::Nontrivial;
        out.certificate = {CertificateKind::Sampled, "sampled state breaks screening", cfg.seed, count};
        out.counterexamples.push_back(screening_witness("sampled state breaks screening", s));
        return out;
      }
    }
    out.certificate = {CertificateKind::Sampled, "screening holds on all sampled states", cfg.seed, count};
  }

  // Strong level: alternate product-form and general commuting pairs.
  const std::size_t per_pair = std::max<std::size_t>(1, cfg.n_states / cfg.n_event_pairs);
  std::size_t count = 0;
  for (std::size_t j = 0; j < cfg.n_event_pairs; ++j) {
    const EventPair p = (bp && j % 2 == 0) ? sampler.product_pair(j) : sampler.commuting_pair(j);
    for (std::size_t t = 0; t < per_pair; ++t) {
      const DensityState s = reference_draw(cfg, d, Stream::State, j * per_pair + t);
      ++count;
      if (!is_ccs(s, part, p, tol).is_ccs) {
        Witness w = screening_witness("sampled event pair and state break screening", s);
        w.A = p.A().op();
        w.B = p.B().op();
        out.counterexamples.push_back(std::move(w));
        return out;
      }
    }
  }
  out.level = Triviality::Strong;
  out.certificate = {CertificateKind::Sampled, "screening holds on all sampled event pairs and states", cfg.seed,
                     count};
  return out;
}

CCSReport classify(const Partition& part, const EventPair& pair, const DensityState& state, const SamplerConfig& cfg,
                   const ClassifyOptions& opts) {
  detail::require_same_dim<double>(part.dim(), pair.dim(), "classify");
  detail::require_same_dim<double>(part.dim(), state.dim(), "classify");
  const Tolerance& tol = opts.tol;
  const auto bp = opts.resolve_bipartition(part.dim());

  CCSReport r;
  r.seed = cfg.seed;
  const auto scr = is_ccs(state, part, pair, tol);
  r.is_ccs = scr.is_ccs;
  r.rank_profile = part.ranks();
  r.atomic = part.is_atomic();
  r.commutation = commutation_class(part, pair, std::optional<DensityState>(state), tol);
  r.product = product_class(part, bp, tol);
  const auto ltp = satisfies_ltp(state, part, pair, tol);
  r.ltp = ltp.holds;
  r.ltp_residuals = ltp.residuals;
  r.correlation_class = correlation_class(state, pair, tol);
  r.zero_probability_elements = scr.zero_probability_elements();
  if (bp && !opts.bipartition) r.notes.push_back("2x2 tensor structure assumed for product tests");

  if (r.is_ccs) {
    r.deterministic = determinism_check(state, part, pair, tol).conditional_form ? Determinism::Yes : Determinism::No;
    auto triv = certify_triviality(part, pair, state, cfg, opts);
    r.triviality = triv.level;
    r.certificate = std::move(triv.certificate);
    r.counterexamples = std::move(triv.counterexamples);
  }
  return r;
}

}  // namespace ccs
