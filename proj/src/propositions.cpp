#include <algorithm>
#include <functional>
#include <numeric>

#include "ccs/classify.hpp"
#include "ccs/families.hpp"
#include "ccs/twoqubit.hpp"

namespace ccs {

namespace {

struct Instance {
  Partition part;
  EventPair pair;
  DensityState state;
};

struct Verdict {
  bool hypotheses = false;
  bool holds = true;
  std::string reason;
};

// Instances are built in a common eigenbasis U of A and B. Columns of U carry a block label
// 0..3 for AB, AB⊥, A⊥B, A⊥B⊥.
struct BuildPlan {
  bool perfect = false;       // state supported in the AB and A⊥B⊥ blocks
  bool atomic = false;
  bool straddle = false;      // one element mixes a support vector with a null vector
  bool mixed_blocks = false;  // commuting elements may span several blocks
  bool rotate_null = true;    // zero-probability part split into noncommuting elements
};

using Groups = std::vector<std::vector<Ket>>;

Groups random_groups(std::vector<Ket> vs, bool atomic, Rng& rng) {
  Groups out;
  if (vs.empty()) return out;
  std::shuffle(vs.begin(), vs.end(), rng);
  std::bernoulli_distribution cut(0.5);
  for (auto& v : vs) {
    if (atomic || out.empty() || cut(rng)) out.emplace_back();
    out.back().push_back(std::move(v));
  }
  return out;
}

Partition partition_from_groups(const Groups& groups, bool atomic, const Tolerance& tol) {
  if (atomic) {
    std::vector<Ket> atoms;
    for (const auto& g : groups) atoms.push_back(g.front());
    return Partition::from_atoms(std::move(atoms), tol);
  }
  std::vector<Projection> elems;
  for (const auto& g : groups) elems.push_back(Projection::span(g, tol));
  return Partition(std::move(elems), tol);
}

Operator block_projection(const Operator& u, const std::vector<int>& block, int lo, int hi) {
  const Index d = u.rows();
  Operator p = Operator::Zero(d, d);
  for (Index j = 0; j < d; ++j)
    if (block[j] == lo || block[j] == hi) p += u.col(j) * u.col(j).adjoint();
  return p;
}

Instance build_instance(const BuildPlan& plan, Rng& rng, const Tolerance& tol) {
  std::uniform_int_distribution<int> dim_dist(3, 6);
  const Index d = dim_dist(rng);
  const Operator u = haar_unitary(d, rng);

  std::uniform_int_distribution<int> label(0, 3);
  std::vector<int> block(d);
  for (auto& b : block) b = label(rng);
  block[0] = 0;
  block[1] = 3;
  const EventPair pair(Projection(block_projection(u, block, 0, 1), tol), Projection(block_projection(u, block, 0, 2), tol),
                       tol);

  std::bernoulli_distribution keep(0.7);
  std::vector<Index> support, null;
  for (Index j = 0; j < d; ++j) {
    const bool eligible = !plan.perfect || block[j] == 0 || block[j] == 3;
    (eligible && keep(rng) ? support : null).push_back(j);
  }
  if (support.empty()) {
    null.erase(std::find(null.begin(), null.end(), Index(0)));
    support.push_back(0);
  }

  Groups groups;
  if (plan.atomic || plan.mixed_blocks) {
    std::vector<Ket> vs;
    for (Index j : support) vs.push_back(u.col(j));
    groups = random_groups(std::move(vs), plan.atomic, rng);
  } else {
    for (int b = 0; b < 4; ++b) {
      std::vector<Ket> vs;
      for (Index j : support)
        if (block[j] == b) vs.push_back(u.col(j));
      for (auto& g : random_groups(std::move(vs), false, rng)) groups.push_back(std::move(g));
    }
  }

  std::vector<Ket> null_vs;
  for (Index j : null) null_vs.push_back(u.col(j));
  if (plan.straddle && !null_vs.empty()) {
    const Ket z = null_vs.back();
    null_vs.pop_back();
    std::uniform_int_distribution<std::size_t> which(0, groups.size() - 1);
    auto& g = groups[which(rng)];
    if (plan.atomic) {
      std::uniform_real_distribution<double> angle(0.2, 1.3);
      const double t = angle(rng);
      const Ket r = g.front();
      g.front() = std::cos(t) * r + std::sin(t) * z;
      groups.push_back({-std::sin(t) * r + std::cos(t) * z});
    } else {
      g.push_back(z);
    }
  }
  if (plan.rotate_null && null_vs.size() >= 2) {
    Operator basis(d, Index(null_vs.size()));
    for (std::size_t j = 0; j < null_vs.size(); ++j) basis.col(Index(j)) = null_vs[j];
    const Operator rotated = basis * haar_unitary(basis.cols(), rng);
    for (Index j = 0; j < rotated.cols(); ++j) null_vs[std::size_t(j)] = rotated.col(j);
  }
  for (auto& g : random_groups(std::move(null_vs), plan.atomic, rng)) groups.push_back(std::move(g));

  Operator sbasis(d, Index(support.size()));
  for (std::size_t j = 0; j < support.size(); ++j) sbasis.col(Index(j)) = u.col(support[j]);
  std::bernoulli_distribution pure(0.3);
  DensityState state = pure(rng) ? DensityState::from_pure(Ket(sbasis * gaussian_ket(sbasis.cols(), rng)))
                                 : ginibre_state_on(sbasis, d, rng);
  return {partition_from_groups(groups, plan.atomic, tol), pair, std::move(state)};
}

// Generic instance with no built-in structure; usually fails the hypotheses.
Instance random_instance(Rng& rng) {
  std::uniform_int_distribution<int> dim_dist(3, 6);
  const Index d = dim_dist(rng);
  Partition part = haar_atomic_partition(d, rng);
  EventPair pair = random_commuting_pair(d, rng);
  return {std::move(part), std::move(pair), ginibre_state(d, rng)};
}

twoqubit::PerfectCorrParams random_ball_point(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = n(rng), y = n(rng), z = n(rng);
  const double r = std::cbrt(u(rng)) / std::sqrt(x * x + y * y + z * z);
  return {x * r, y * r, z * r};
}

Instance family_instance(bool rank_two, Rng& rng, const Tolerance& tol) {
  std::uniform_real_distribution<double> alpha(0.05, M_PI / 2 - 0.05);
  std::uniform_real_distribution<double> beta(0.0, 2 * M_PI);
  const double a = alpha(rng);
  families::FamilyParams p;
  p.c = Complex(std::cos(a), 0.0);
  p.s = std::polar(std::sin(a), beta(rng));
  p.r = random_ball_point(rng);
  auto inst = families::generate(rank_two ? families::FamilyId::CCS22ntratC : families::FamilyId::CCSntratC, p, tol);
  return {std::move(inst.partition), twoqubit::canonical_events(), std::move(*inst.state)};
}

Witness witness_of(const Instance& inst, std::string reason) {
  Witness w{std::move(reason), inst.state.rho(), {}, inst.pair.A().op(), inst.pair.B().op()};
  for (const auto& c : inst.part) w.partition.push_back(c.op());
  return w;
}

bool is_diagonal(const Operator& x, double eps) {
  Operator off = x;
  off.diagonal().setZero();
  return detail::approx_zero<double>(off, eps);
}

bool weakly_commuting(const Instance& inst, const Tolerance& tol) {
  return commutation_class(inst.part, inst.pair, std::optional<DensityState>(inst.state), tol) !=
         CommutationClass::Noncommuting;
}

bool perfectly_correlated(const Instance& inst, const Tolerance& tol) {
  return is_perfect(correlation_class(inst.state, inst.pair, tol));
}

struct Runner {
  const SamplerConfig& cfg;
  const PropositionOptions& opts;

  PropositionResult run(std::uint64_t tag, std::string name, std::string strategy,
                        const std::function<Instance(std::size_t, Rng&)>& make,
                        const std::function<Verdict(const Instance&, Rng&)>& check) const {
    PropositionResult res;
    res.name = std::move(name);
    res.strategy = std::move(strategy);
    for (std::size_t i = 0; i < cfg.n_states; ++i) {
      auto rng = stream_engine(cfg.seed, Stream::Proposition, (tag << 32) | i);
      const Instance inst = make(i, rng);
      const Verdict v = check(inst, rng);
      ++res.instances;
      if (!v.hypotheses) continue;
      ++res.hypotheses_met;
      if (v.holds) continue;
      ++res.violations;
      if (res.counterexamples.size() < opts.max_counterexamples)
        res.counterexamples.push_back(witness_of(inst, v.reason));
    }
    return res;
  }
};

}  // namespace

bool PropositionReport::all_passed() const {
  return contrast.confirmed() &&
         std::all_of(results.begin(), results.end(), [](const PropositionResult& r) { return r.violations == 0; });
}

PropositionReport verify_propositions(const SamplerConfig& cfg, const PropositionOptions& opts) {
  cfg.validate();
  const Tolerance& tol = opts.tol;
  const Runner runner{cfg, opts};
  PropositionReport rep;
  rep.seed = cfg.seed;
  rep.n = cfg.n_states;

  std::bernoulli_distribution coin(0.5);

  rep.results.push_back(runner.run(
      1, "CommLTP",
      "eigenbasis-block CCS with commuting support elements, rotated zero-probability elements, occasional straddles",
      [&](std::size_t i, Rng& rng) {
        if (i % 10 == 9) return random_instance(rng);
        BuildPlan s;
        s.perfect = i % 3 == 0;
        s.atomic = coin(rng);
        s.straddle = i % 4 == 1;
        s.mixed_blocks = i % 2 == 0;
        return build_instance(s, rng, tol);
      },
      [&](const Instance& inst, Rng&) {
        Verdict v;
        v.hypotheses = is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs && weakly_commuting(inst, tol);
        v.holds = satisfies_ltp(inst.state, inst.part, inst.pair, tol).holds;
        v.reason = "weakly commuting CCS violates LTP";
        return v;
      }));

  rep.results.push_back(runner.run(
      2, "classmaxodet",
      "perfect-correlation state on the AB and A⊥B⊥ blocks, weakly commuting partitions",
      [&](std::size_t i, Rng& rng) {
        if (i % 10 == 9) return random_instance(rng);
        BuildPlan s;
        s.perfect = true;
        s.atomic = coin(rng);
        s.straddle = i % 4 == 1;
        s.mixed_blocks = i % 3 == 0;
        return build_instance(s, rng, tol);
      },
      [&](const Instance& inst, Rng&) {
        Verdict v;
        v.hypotheses = perfectly_correlated(inst, tol) && is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs &&
                       weakly_commuting(inst, tol);
        v.holds = v.hypotheses && determinism_check(inst.state, inst.part, inst.pair, tol).conditional_form;
        v.reason = "weakly commuting CCS of a perfect correlation is not deterministic";
        return v;
      }));

  rep.results.push_back(runner.run(
      3, "CCSLTPPCdeterm",
      "perfect-correlation state with straddling elements Π_R + Π_Z, plus the complex-parameter families",
      [&](std::size_t i, Rng& rng) {
        if (i % 10 == 9) return random_instance(rng);
        if (i % 10 == 8) return family_instance((i / 10) % 2 == 1, rng, tol);
        BuildPlan s;
        s.perfect = true;
        s.atomic = coin(rng);
        s.straddle = i % 2 == 0;
        s.mixed_blocks = i % 3 == 0;
        return build_instance(s, rng, tol);
      },
      [&](const Instance& inst, Rng&) {
        Verdict v;
        v.hypotheses = perfectly_correlated(inst, tol) && is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs &&
                       satisfies_ltp(inst.state, inst.part, inst.pair, tol).holds;
        if (v.hypotheses) {
          const auto det = determinism_check(inst.state, inst.part, inst.pair, tol);
          v.holds = det.conditional_form && det.joint_form;
        }
        v.reason = "LTP-satisfying CCS of a perfect correlation is not deterministic";
        return v;
      }));

  const auto atomic_ltp_make = [&](std::size_t i, Rng& rng) {
    if (i % 10 == 9) return random_instance(rng);
    if (i % 10 == 8) return family_instance((i / 10) % 2 == 1, rng, tol);
    BuildPlan s;
    s.perfect = true;
    s.atomic = i % 5 != 0;
    s.straddle = i % 2 == 0;
    return build_instance(s, rng, tol);
  };
  const std::string atomic_ltp_strategy =
      "perfect-correlation state, atomic partitions with rotated straddling atoms, plus the complex-parameter families";

  rep.results.push_back(runner.run(4, "aCCSLTPPCComm", atomic_ltp_strategy, atomic_ltp_make,
                                   [&](const Instance& inst, Rng&) {
                                     Verdict v;
                                     const bool atomic = inst.part.is_atomic() != opts.invert_atomicity;
                                     v.hypotheses = atomic && perfectly_correlated(inst, tol) &&
                                                    is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs &&
                                                    satisfies_ltp(inst.state, inst.part, inst.pair, tol).holds;
                                     v.holds = weakly_commuting(inst, tol);
                                     v.reason = "atomic LTP-satisfying CCS of a perfect correlation is noncommuting";
                                     return v;
                                   }));

  rep.results.push_back(runner.run(
      5, "aCCSLTPPCComm2", atomic_ltp_strategy, atomic_ltp_make, [&](const Instance& inst, Rng&) {
        Verdict v;
        if (!inst.part.is_atomic() || !perfectly_correlated(inst, tol) ||
            !is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs)
          return v;
        // LTP in the atomic form Σ_k ⟨γ_k|ρ|γ_k⟩⟨γ_k|X|γ_k⟩ = Tr(ρX).
        const auto events = inst.pair.joint_events();
        const auto pinched = satisfies_ltp(inst.state, inst.part, inst.pair, tol);
        std::array<double, 4> residual{};
        for (int x = 0; x < 4; ++x) residual[x] = -detail::trace_product<double>(inst.state.rho(), events[x]).real();
        std::vector<Ket> atoms;
        std::vector<double> q;
        for (std::size_t k = 0; k < inst.part.size(); ++k) {
          atoms.push_back(inst.part.atom(k));
          q.push_back(atoms.back().dot(inst.state.rho() * atoms.back()).real());
          for (int x = 0; x < 4; ++x) residual[x] += q.back() * atoms.back().dot(events[x] * atoms.back()).real();
        }
        bool formula = true;
        for (int x = 0; x < 4; ++x) {
          formula = formula && std::abs(residual[x]) <= tol.eps_eq;
          if (std::abs(residual[x] - pinched.residuals[x]) > tol.eps_eq) {
            v.hypotheses = true;
            v.holds = false;
            v.reason = "atomic LTP formula disagrees with the pinched form";
            return v;
          }
        }
        v.hypotheses = formula;
        for (std::size_t k = 0; k < atoms.size() && v.holds; ++k) {
          if (q[k] <= tol.eps_prob) continue;
          const double in_ab = atoms[k].dot(events[0] * atoms[k]).real();
          const double in_anbn = atoms[k].dot(events[3] * atoms[k]).real();
          v.holds = in_ab >= 1 - tol.eps_eq || in_anbn >= 1 - tol.eps_eq;
        }
        v.reason = "nonzero-probability atom outside ran(AB) and ran(A⊥B⊥)";
        return v;
      }));

  rep.results.push_back(runner.run(
      6, "commatomicCCSwtriv",
      "atomic partitions in the common eigenbasis with rotated zero-probability atoms and straddles",
      [&](std::size_t i, Rng& rng) {
        if (i % 10 == 9) return random_instance(rng);
        BuildPlan s;
        s.atomic = true;
        s.straddle = i % 3 == 0;
        s.rotate_null = i % 2 == 0;
        return build_instance(s, rng, tol);
      },
      [&](const Instance& inst, Rng& rng) {
        Verdict v;
        v.hypotheses = inst.part.is_atomic() && weakly_commuting(inst, tol);
        if (!v.hypotheses) return v;
        v.holds = is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs;
        v.reason = "weakly commuting atomic partition does not screen off";
        if (v.holds && commutation_class(inst.part, inst.pair, std::optional<DensityState>(), tol) == CommutationClass::Commuting) {
          for (int t = 0; t < 5 && v.holds; ++t)
            v.holds = is_ccs(ginibre_state(inst.part.dim(), rng), inst.part, inst.pair, tol).is_ccs;
          v.reason = "commuting atomic partition does not screen off for a sampled state";
        }
        return v;
      }));

  rep.results.push_back(runner.run(
      7, "classatomicCCSstriv", "computational-basis atoms with diagonal events and diagonal states",
      [&](std::size_t i, Rng& rng) {
        std::uniform_int_distribution<int> dim_dist(3, 6);
        const Index d = dim_dist(rng);
        std::vector<Ket> atoms;
        for (Index j = 0; j < d; ++j) atoms.push_back(Ket::Unit(d, j));
        std::shuffle(atoms.begin(), atoms.end(), rng);
        std::bernoulli_distribution bit(0.5);
        Operator a = Operator::Zero(d, d), b = Operator::Zero(d, d);
        for (Index j = 0; j < d; ++j) {
          a(j, j) = bit(rng) ? 1.0 : 0.0;
          b(j, j) = bit(rng) ? 1.0 : 0.0;
        }
        Operator rho;
        if (i % 10 == 9) {
          rho = ginibre_state(d, rng).rho();
        } else {
          std::exponential_distribution<double> w(1.0);
          rho = Operator::Zero(d, d);
          for (Index j = 0; j < d; ++j) rho(j, j) = bit(rng) || j == 0 ? w(rng) : 0.0;
          rho /= rho.trace().real();
        }
        return Instance{Partition::from_atoms(std::move(atoms), tol), EventPair(Projection(a), Projection(b)),
                        DensityState(rho, tol)};
      },
      [&](const Instance& inst, Rng& rng) {
        Verdict v;
        const double eps = tol.eps_eq;
        v.hypotheses = is_diagonal(inst.state.rho(), eps) && is_diagonal(inst.pair.A().op(), eps) &&
                       is_diagonal(inst.pair.B().op(), eps) &&
                       std::all_of(inst.part.begin(), inst.part.end(),
                                   [&](const Projection& c) { return is_diagonal(c.op(), eps); });
        if (!v.hypotheses) return v;
        v.holds = is_ccs(inst.state, inst.part, inst.pair, tol).is_ccs &&
                  satisfies_ltp(inst.state, inst.part, inst.pair, tol).holds;
        v.reason = "classical atomic partition fails screening or LTP";
        const Index d = inst.part.dim();
        std::bernoulli_distribution bit(0.5);
        for (int t = 0; t < 3 && v.holds; ++t) {
          Operator a = Operator::Zero(d, d), b = Operator::Zero(d, d);
          for (Index j = 0; j < d; ++j) {
            a(j, j) = bit(rng) ? 1.0 : 0.0;
            b(j, j) = bit(rng) ? 1.0 : 0.0;
          }
          v.holds = is_ccs(inst.state, inst.part, EventPair(Projection(a), Projection(b)), tol).is_ccs;
          v.reason = "classical atomic partition fails screening for another diagonal pair";
        }
        return v;
      }));

  // Nonatomic contrast: noncommuting yet LTP-satisfying and deterministic.
  ContrastResult& c = rep.contrast;
  c = {true, true, true, true};
  const double h = 1 / std::sqrt(2.0);
  const std::array<std::pair<Complex, Complex>, 2> cs{{{h, h}, {h, Complex(0, h)}}};
  const std::array<twoqubit::PerfectCorrParams, 2> rs{{{1, 0, 0}, {0.6, 0.3, 0.2}}};
  const EventPair canonical = twoqubit::canonical_events();
  for (const auto& [cc, ss] : cs) {
    for (const auto& r : rs) {
      families::FamilyParams p;
      p.c = cc;
      p.s = ss;
      p.r = r;
      const auto inst = families::generate(families::FamilyId::CCS22ntratC, p, tol);
      const DensityState& st = *inst.state;
      const bool ccs_ok = is_ccs(st, inst.partition, canonical, tol).is_ccs;
      c.ccs = c.ccs && ccs_ok;
      c.noncommuting = c.noncommuting && commutation_class(inst.partition, canonical, std::optional<DensityState>(st),
                                                           tol) == CommutationClass::Noncommuting;
      c.ltp = c.ltp && satisfies_ltp(st, inst.partition, canonical, tol).holds;
      c.deterministic = c.deterministic && ccs_ok && is_deterministic_ccs(st, inst.partition, canonical, tol);
    }
  }
  return rep;
}

}  // namespace ccs
