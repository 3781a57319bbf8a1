#include <doctest.h>

#include "ccs/qprob.hpp"
#include "support.hpp"

using namespace ccs;
using ccs::testing::Gen;

namespace {

Operator diag4(double a, double b, double c, double d) {
  Operator m = Operator::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

EventPair canonical() { return EventPair(Projection(diag4(1, 1, 0, 0)), Projection(diag4(1, 0, 1, 0))); }

Partition computational() {
  std::vector<Ket> atoms;
  for (int i = 0; i < 4; ++i) atoms.push_back(Ket::Unit(4, i));
  return Partition::from_atoms(atoms);
}

}  // namespace

TEST_SUITE("qprob") {

TEST_CASE("projection validation") {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS_AS(Projection{m}, InvalidArgument);
  CHECK_THROWS_AS(Projection(Operator::Identity(2, 2) * 2.0), InvalidArgument);
  CHECK_THROWS_AS(Projection(Operator(2, 3)), InvalidArgument);
  Operator nan = Operator::Zero(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(Projection{nan}, InvalidArgument);
  CHECK(Projection::identity(3).rank() == 3);
  CHECK(complement(Projection::zero(3)).rank() == 3);
  CHECK_THROWS_AS(Projection::onto(Ket::Zero(2)), InvalidArgument);
}

TEST_CASE("projection rank agrees with eigenvalue count") {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Index d = g.integer(2, 6);
    const Index r = g.integer(0, int(d));
    const Projection p = r == 0 ? Projection::zero(d) : g.projection(d, r);
    CHECK(p.rank() == ccs::testing::eigen_rank(p.op()));
    CHECK(ccs::testing::svd_rank<double>(p.op(), 1e-10) == r);
  }
}

TEST_CASE("partition validation") {
  std::vector<Projection> overlap{Projection(diag4(1, 1, 0, 0)), Projection(diag4(0, 1, 1, 1))};
  CHECK_THROWS_AS(Partition{overlap}, InvalidArgument);
  std::vector<Projection> short_sum{Projection(diag4(1, 0, 0, 0)), Projection(diag4(0, 1, 0, 0))};
  CHECK_THROWS_AS(Partition{short_sum}, InvalidArgument);
  std::vector<Projection> mixed{Projection::identity(2), Projection::zero(3)};
  CHECK_THROWS_AS(Partition{mixed}, DimensionMismatch);
  CHECK_THROWS_AS(Partition(std::vector<Projection>{}), InvalidArgument);
  std::vector<Ket> bad{Ket::Unit(2, 0), Ket::Unit(2, 1) * 2.0};
  CHECK_THROWS_AS(Partition::from_atoms(bad), NormalizationViolation);

  const Partition p = computational();
  CHECK(p.is_atomic());
  CHECK(p.ranks() == std::vector<Index>{1, 1, 1, 1});
  CHECK((p.atom(2) - Ket::Unit(4, 2)).norm() < 1e-15);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(DensityState(diag4(0.5, 0.5, 0.5, 0)), InvalidArgument);
  CHECK_THROWS_AS(DensityState(diag4(1.5, -0.5, 0, 0)), InvalidArgument);
  Operator nh = diag4(0.5, 0.5, 0, 0);
  nh(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityState{nh}, InvalidArgument);
  CHECK_THROWS_AS(PureState(Ket::Ones(2)), NormalizationViolation);
  CHECK_NOTHROW(PureState::normalized(Ket::Ones(2)));
  CHECK(DensityState::maximally_mixed(4).purity() == doctest::Approx(0.25));
  CHECK(DensityState::from_pure(Ket::Unit(3, 1)).is_pure());
  CHECK_THROWS_AS(DensityState::mixture(1.5, DensityState::maximally_mixed(2), DensityState::maximally_mixed(2)),
                  InvalidArgument);
}

TEST_CASE("event pair requires commuting events") {
  const Projection a(diag4(1, 1, 0, 0));
  const Projection plus = Projection::onto(ccs::testing::ket4(1, 1, 0, 0));
  CHECK_THROWS_AS(EventPair(Projection(diag4(1, 0, 0, 0)), plus), InvalidArgument);
  CHECK_NOTHROW(EventPair(a, plus));
}

TEST_CASE("conditional probability on a zero-probability condition") {
  const auto s = DensityState::from_pure(Ket::Unit(4, 0));
  const Projection c(diag4(0, 1, 0, 0));
  CHECK_THROWS_AS(conditional_probability(s, c, c), ZeroProbabilityCondition);
  CHECK_THROWS_AS(conditional_state(s, c), ZeroProbabilityCondition);
  CHECK_THROWS_AS(probability(DensityState::maximally_mixed(2), c), DimensionMismatch);
}

TEST_CASE("correlation forms agree and stay within a quarter") {
  Gen g(12);
  for (int i = 0; i < 2000; ++i) {
    const Index d = g.integer(2, 6);
    const auto s = g.coin() ? g.state(d) : DensityState::from_pure(g.ket(d));
    const auto pair = g.commuting_pair(d);
    const auto f = correlation(s, pair);
    CHECK(std::abs(f.original - f.balanced) <= 1e-12);
    CHECK(f.original <= 0.25 + 1e-12);
    CHECK(f.original >= -0.25 - 1e-12);
  }
}

TEST_CASE("Bell state reaches the correlation extrema") {
  const auto s = DensityState::from_pure(ccs::testing::bell0());
  const EventPair ab = canonical();
  CHECK(correlation(s, ab).original == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(correlation(s, ab.with_B_complemented()).original == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(correlation_class(s, ab) == CorrelationClass::MaximallyCorrelated);
  CHECK(correlation_class(s, ab.with_B_complemented()) == CorrelationClass::MaximallyAnticorrelated);
  CHECK(correlation_class(DensityState::maximally_mixed(4), ab) == CorrelationClass::Uncorrelated);
}

TEST_CASE("conditional expectation is a trace-preserving idempotent") {
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const Index d = g.integer(2, 5);
    const auto part = g.atomic_partition(d);
    const Operator x = g.ginibre(d, d);
    const Operator ex = conditional_expectation(part, x);
    CHECK(std::abs(ex.trace() - x.trace()) < 1e-10);
    CHECK((conditional_expectation(part, ex) - ex).norm() < 1e-10);
    for (const auto& c : part) CHECK((c.op() * ex - ex * c.op()).norm() < 1e-10);
  }
}

TEST_CASE("commuting partitions satisfy the total probability law") {
  Gen g(14);
  for (int i = 0; i < 200; ++i) {
    const Index d = g.integer(2, 6);
    const Operator u = g.unitary(d);
    Operator a = Operator::Zero(d, d), b = Operator::Zero(d, d);
    std::vector<Ket> atoms;
    for (Index k = 0; k < d; ++k) {
      atoms.push_back(u.col(k));
      if (g.coin()) a += u.col(k) * u.col(k).adjoint();
      if (g.coin()) b += u.col(k) * u.col(k).adjoint();
    }
    const auto part = Partition::from_atoms(atoms);
    const EventPair pair{Projection(a), Projection(b)};
    const auto s = g.state(d);
    CHECK(satisfies_ltp(s, part, pair).holds);
    CHECK(commutation_class(part, pair) == CommutationClass::Commuting);
  }
}

TEST_CASE("screening and determinism on the computational basis") {
  const auto s = DensityState::from_pure(ccs::testing::bell0());
  const auto scr = is_ccs(s, computational(), canonical());
  CHECK(scr.is_ccs);
  CHECK(scr.zero_probability_elements() == std::vector<std::size_t>{1, 2});
  const auto det = determinism_check(s, computational(), canonical());
  CHECK(det.conditional_form);
  CHECK(det.joint_form);

  std::vector<Projection> trivial{Projection::identity(4)};
  CHECK_FALSE(is_ccs(s, Partition(trivial), canonical()).is_ccs);
  CHECK_THROWS_AS(determinism_check(s, Partition(trivial), canonical()), NotACCS);
}

TEST_CASE("weak commutation depends on the state") {
  const double c = std::cos(0.4), sn = std::sin(0.4);
  const std::vector<Ket> atoms{Ket::Unit(4, 0), ccs::testing::ket4(0, c, sn, 0), ccs::testing::ket4(0, -sn, c, 0),
                               Ket::Unit(4, 3)};
  const auto part = Partition::from_atoms(atoms);
  const auto bell = DensityState::from_pure(ccs::testing::bell0());
  const auto mixed = DensityState::maximally_mixed(4);
  CHECK(commutation_class(part, canonical()) == CommutationClass::Noncommuting);
  CHECK(commutation_class(part, canonical(), std::optional(bell)) == CommutationClass::WeaklyCommuting);
  CHECK(commutation_class(part, canonical(), std::optional(mixed)) == CommutationClass::Noncommuting);
  CHECK(zero_probability_part_vanishes(bell, part, canonical()));
  CHECK_THROWS_AS(zero_probability_part_vanishes(mixed, part, canonical()), PreconditionViolated);
}

TEST_CASE("long double instantiation") {
  using LD = long double;
  using Op = BasicOperator<LD>;
  Op a = Op::Zero(4, 4), b = Op::Zero(4, 4);
  a(0, 0) = a(1, 1) = 1;
  b(0, 0) = b(2, 2) = 1;
  const BasicEventPair<LD> pair{BasicProjection<LD>(a), BasicProjection<LD>(b)};
  BasicKet<LD> psi = BasicKet<LD>::Zero(4);
  psi(0) = psi(3) = std::sqrt(LD(0.5));
  const auto s = BasicDensityState<LD>::from_pure(psi);

  std::vector<BasicKet<LD>> atoms;
  for (int i = 0; i < 4; ++i) atoms.push_back(BasicKet<LD>::Unit(4, i));
  const auto part = BasicPartition<LD>::from_atoms(atoms);

  const auto f = correlation(s, pair);
  CHECK(std::abs(f.original - LD(0.25)) < LD(1e-18));
  CHECK(std::abs(f.balanced - LD(0.25)) < LD(1e-18));
  CHECK(is_ccs(s, part, pair).is_ccs);
  CHECK(satisfies_ltp(s, part, pair).holds);
  CHECK(is_deterministic_ccs(s, part, pair));

  Gen<LD> g(15);
  for (int i = 0; i < 50; ++i) {
    const auto r = g.state(4);
    const auto p = g.commuting_pair(4);
    const auto h = correlation(r, p);
    CHECK(std::abs(h.original - h.balanced) < LD(1e-16));
  }
}

}  // TEST_SUITE
