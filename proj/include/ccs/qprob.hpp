#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccs/error.hpp"

namespace ccs {

using Index = Eigen::Index;

template <typename Real>
using BasicOperator = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using BasicKet = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Operator = BasicOperator<double>;
using Ket = BasicKet<double>;

template <typename Real>
struct BasicTolerance {
  Real eps_eq = Real(1e-9);
  Real eps_prob = Real(1e-12);

  BasicTolerance() = default;
  BasicTolerance(Real eq, Real prob) : eps_eq(eq), eps_prob(prob) { validate(); }

  void validate() const {
    if (!(eps_eq > 0 && eps_eq < 1 && eps_prob > 0 && eps_prob < 1))
      throw InvalidArgument("tolerances must lie in (0, 1)");
  }
};
using Tolerance = BasicTolerance<double>;

namespace detail {

template <typename Real>
Real frobenius_distance(const BasicOperator<Real>& a, const BasicOperator<Real>& b) {
  return (a - b).norm();
}

template <typename Real>
bool approx_equal(const BasicOperator<Real>& a, const BasicOperator<Real>& b, Real eps) {
  return frobenius_distance(a, b) <= eps * Real(a.rows());
}

template <typename Real>
bool approx_zero(const BasicOperator<Real>& a, Real eps) {
  return a.norm() <= eps * Real(a.rows());
}

// Tr(a b) without forming the product.
template <typename Real>
std::complex<Real> trace_product(const BasicOperator<Real>& a, const BasicOperator<Real>& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

template <typename Real>
void require_same_dim(Index a, Index b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

template <typename Real>
Real clamp_probability(Real p, Real eps) {
  if (!(p >= -eps && p <= 1 + eps))
    throw ProbabilityOutOfRange("probability " + std::to_string(double(p)) + " outside [0, 1]");
  return std::clamp(p, Real(0), Real(1));
}

}  // namespace detail

template <typename Real>
class BasicProjection {
 public:
  using OperatorType = BasicOperator<Real>;

  explicit BasicProjection(OperatorType op, const BasicTolerance<Real>& tol = {}) : op_(std::move(op)) {
    if (op_.rows() < 1 || op_.rows() != op_.cols()) throw InvalidArgument("projection must be square, dim >= 1");
    if (!op_.allFinite()) throw InvalidArgument("projection has non-finite entries");
    if (!detail::approx_equal<Real>(op_, op_.adjoint(), tol.eps_eq))
      throw InvalidArgument("projection is not Hermitian");
    if (!detail::approx_equal<Real>(op_ * op_, op_, tol.eps_eq))
      throw InvalidArgument("projection is not idempotent");
  }

  static BasicProjection identity(Index dim) { return BasicProjection(trusted, OperatorType::Identity(dim, dim)); }
  static BasicProjection zero(Index dim) { return BasicProjection(trusted, OperatorType::Zero(dim, dim)); }

  // |v><v| / <v|v>
  static BasicProjection onto(const BasicKet<Real>& v) {
    const Real n2 = v.squaredNorm();
    if (!(n2 > 0)) throw InvalidArgument("cannot project onto the zero vector");
    return BasicProjection(trusted, (v * v.adjoint()) / n2);
  }

  // Sum of |v_k><v_k| over a list of mutually orthogonal unit vectors.
  static BasicProjection span(const std::vector<BasicKet<Real>>& vs, const BasicTolerance<Real>& tol = {}) {
    if (vs.empty()) throw InvalidArgument("span of an empty list");
    OperatorType p = OperatorType::Zero(vs.front().size(), vs.front().size());
    for (const auto& v : vs) p += v * v.adjoint();
    return BasicProjection(std::move(p), tol);
  }

  const OperatorType& op() const noexcept { return op_; }
  Index dim() const noexcept { return op_.rows(); }
  Index rank() const { return Index(std::llround(double(op_.trace().real()))); }

  friend BasicProjection complement(const BasicProjection& p) {
    return BasicProjection(trusted, OperatorType::Identity(p.dim(), p.dim()) - p.op_);
  }

 private:
  struct Trusted {};
  static constexpr Trusted trusted{};
  BasicProjection(Trusted, OperatorType op) : op_(std::move(op)) {}

  OperatorType op_;
};

template <typename Real>
class BasicPartition {
 public:
  using ProjectionType = BasicProjection<Real>;

  explicit BasicPartition(std::vector<ProjectionType> elements, const BasicTolerance<Real>& tol = {})
      : elements_(std::move(elements)) {
    validate(tol);
  }

  // Atomic partition from an orthonormal basis; the vectors are kept.
  static BasicPartition from_atoms(std::vector<BasicKet<Real>> atoms, const BasicTolerance<Real>& tol = {}) {
    std::vector<ProjectionType> elems;
    elems.reserve(atoms.size());
    for (const auto& v : atoms) {
      if (std::abs(v.norm() - Real(1)) > tol.eps_eq) throw NormalizationViolation("atom is not a unit vector");
      elems.push_back(ProjectionType(v * v.adjoint(), tol));
    }
    BasicPartition p(std::move(elems), tol);
    p.atoms_ = std::move(atoms);
    return p;
  }

  std::size_t size() const noexcept { return elements_.size(); }
  Index dim() const { return elements_.front().dim(); }
  const ProjectionType& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<ProjectionType>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::vector<Index> ranks() const {
    std::vector<Index> r;
    for (const auto& c : elements_) r.push_back(c.rank());
    return r;
  }

  bool is_atomic() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const auto& c) { return c.rank() == 1; });
  }

  bool has_stored_atoms() const noexcept { return !atoms_.empty(); }
  const std::vector<BasicKet<Real>>& stored_atoms() const noexcept { return atoms_; }

  // Unit vector spanning a rank-one element: the stored atom, or a column of the projector.
  BasicKet<Real> atom(std::size_t k) const {
    if (!atoms_.empty()) return atoms_[k];
    const auto& p = elements_[k].op();
    if (elements_[k].rank() != 1) throw InvalidArgument("element " + std::to_string(k) + " is not rank one");
    Index j = 0;
    p.diagonal().real().maxCoeff(&j);
    return p.col(j) / std::sqrt(p(j, j).real());
  }

 private:
  void validate(const BasicTolerance<Real>& tol) const {
    if (elements_.empty()) throw InvalidArgument("partition has no elements");
    const Index d = elements_.front().dim();
    BasicOperator<Real> sum = BasicOperator<Real>::Zero(d, d);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      detail::require_same_dim<Real>(elements_[j].dim(), d, "partition element");
      sum += elements_[j].op();
      for (std::size_t k = j + 1; k < elements_.size(); ++k)
        if (!detail::approx_zero<Real>(elements_[j].op() * elements_[k].op(), tol.eps_eq))
          throw InvalidArgument("partition elements " + std::to_string(j) + " and " + std::to_string(k) +
                                " are not orthogonal");
    }
    if (!detail::approx_equal<Real>(sum, BasicOperator<Real>::Identity(d, d), tol.eps_eq))
      throw InvalidArgument("partition elements do not sum to the identity");
  }

  std::vector<ProjectionType> elements_;
  std::vector<BasicKet<Real>> atoms_;
};

template <typename Real>
class BasicPureState {
 public:
  explicit BasicPureState(BasicKet<Real> psi, const BasicTolerance<Real>& tol = {}) : psi_(std::move(psi)) {
    if (psi_.size() < 1 || !psi_.allFinite()) throw InvalidArgument("state vector must be finite, dim >= 1");
    if (std::abs(psi_.norm() - Real(1)) > tol.eps_eq) throw NormalizationViolation("state vector is not normalized");
  }

  static BasicPureState normalized(const BasicKet<Real>& v) {
    const Real n = v.norm();
    if (!(n > 0)) throw InvalidArgument("cannot normalize the zero vector");
    return BasicPureState(v / n);
  }

  const BasicKet<Real>& vector() const noexcept { return psi_; }
  Index dim() const noexcept { return psi_.size(); }

 private:
  BasicKet<Real> psi_;
};

template <typename Real>
class BasicDensityState {
 public:
  using OperatorType = BasicOperator<Real>;

  explicit BasicDensityState(OperatorType rho, const BasicTolerance<Real>& tol = {}) : rho_(std::move(rho)) {
    if (rho_.rows() < 1 || rho_.rows() != rho_.cols()) throw InvalidArgument("density operator must be square");
    if (!rho_.allFinite()) throw InvalidArgument("density operator has non-finite entries");
    if (!detail::approx_equal<Real>(rho_, rho_.adjoint(), tol.eps_eq))
      throw InvalidArgument("density operator is not Hermitian");
    if (std::abs(rho_.trace() - std::complex<Real>(1)) > tol.eps_eq)
      throw InvalidArgument("density operator does not have unit trace");
    const OperatorType h = (rho_ + rho_.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<OperatorType> es(h, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.eps_eq) throw InvalidArgument("density operator is not positive");
  }

  static BasicDensityState from_pure(const BasicKet<Real>& v) {
    const Real n2 = v.squaredNorm();
    if (!(n2 > 0) || !v.allFinite()) throw InvalidArgument("cannot build a state from this vector");
    return BasicDensityState(trusted, (v * v.adjoint()) / n2);
  }
  static BasicDensityState from_pure(const BasicPureState<Real>& psi) { return from_pure(psi.vector()); }

  static BasicDensityState maximally_mixed(Index dim) {
    return BasicDensityState(trusted, OperatorType::Identity(dim, dim) / Real(dim));
  }

  // Convex mixture w*a + (1-w)*b.
  static BasicDensityState mixture(Real w, const BasicDensityState& a, const BasicDensityState& b) {
    detail::require_same_dim<Real>(a.dim(), b.dim(), "mixture");
    if (!(w >= 0 && w <= 1)) throw InvalidArgument("mixture weight outside [0, 1]");
    return BasicDensityState(trusted, w * a.rho_ + (1 - w) * b.rho_);
  }

  const OperatorType& rho() const noexcept { return rho_; }
  Index dim() const noexcept { return rho_.rows(); }

  Real purity() const { return detail::trace_product<Real>(rho_, rho_).real(); }
  bool is_pure(const BasicTolerance<Real>& tol = {}) const { return purity() >= 1 - tol.eps_eq; }

  // Dominant eigenvector; meaningful when the state is pure.
  BasicKet<Real> dominant_vector() const {
    Eigen::SelfAdjointEigenSolver<OperatorType> es((rho_ + rho_.adjoint()) / Real(2));
    return es.eigenvectors().col(rho_.rows() - 1);
  }

  // Conditional state C rho C / Tr(rho C).
  friend BasicDensityState conditional_state(const BasicDensityState& s, const BasicProjection<Real>& c,
                                             const BasicTolerance<Real>& tol = {}) {
    detail::require_same_dim<Real>(s.dim(), c.dim(), "conditional_state");
    const Real p = detail::trace_product<Real>(s.rho_, c.op()).real();
    if (p <= tol.eps_prob) throw ZeroProbabilityCondition("condition has zero probability");
    return BasicDensityState(trusted, c.op() * s.rho_ * c.op() / p);
  }

 private:
  struct Trusted {};
  static constexpr Trusted trusted{};
  BasicDensityState(Trusted, OperatorType rho) : rho_(std::move(rho)) {}

  OperatorType rho_;
};

template <typename Real>
class BasicEventPair {
 public:
  using ProjectionType = BasicProjection<Real>;
  using OperatorType = BasicOperator<Real>;

  BasicEventPair(ProjectionType a, ProjectionType b, const BasicTolerance<Real>& tol = {})
      : a_(std::move(a)), b_(std::move(b)) {
    detail::require_same_dim<Real>(a_.dim(), b_.dim(), "event pair");
    if (!detail::approx_zero<Real>(a_.op() * b_.op() - b_.op() * a_.op(), tol.eps_eq))
      throw InvalidArgument("events A and B do not commute");
  }

  const ProjectionType& A() const noexcept { return a_; }
  const ProjectionType& B() const noexcept { return b_; }
  Index dim() const noexcept { return a_.dim(); }

  // The pair with B replaced by its complement.
  BasicEventPair with_B_complemented() const { return BasicEventPair(a_, complement(b_)); }

  // AB, AB⊥, A⊥B, A⊥B⊥ in this order.
  std::array<OperatorType, 4> joint_events() const {
    const Index d = dim();
    const OperatorType id = OperatorType::Identity(d, d);
    const OperatorType& a = a_.op();
    const OperatorType& b = b_.op();
    return {a * b, a * (id - b), (id - a) * b, (id - a) * (id - b)};
  }

 private:
  ProjectionType a_, b_;
};

using Projection = BasicProjection<double>;
using Partition = BasicPartition<double>;
using PureState = BasicPureState<double>;
using DensityState = BasicDensityState<double>;
using EventPair = BasicEventPair<double>;

// ---------------------------------------------------------------------------
// Probabilities and correlations

template <typename Real>
Real probability(const BasicDensityState<Real>& s, const BasicProjection<Real>& x, const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), x.dim(), "probability");
  return detail::clamp_probability(detail::trace_product<Real>(s.rho(), x.op()).real(), tol.eps_eq);
}

template <typename Real>
Real conditional_probability(const BasicDensityState<Real>& s, const BasicProjection<Real>& x,
                             const BasicProjection<Real>& c, const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), x.dim(), "conditional_probability");
  detail::require_same_dim<Real>(s.dim(), c.dim(), "conditional_probability");
  const Real p = detail::trace_product<Real>(s.rho(), c.op()).real();
  if (p <= tol.eps_prob) throw ZeroProbabilityCondition("condition has zero probability");
  const BasicOperator<Real> crc = c.op() * s.rho() * c.op();
  return detail::clamp_probability(detail::trace_product<Real>(crc, x.op()).real() / p, tol.eps_eq);
}

// E(X) = Σ_k C_k X C_k
template <typename Real>
BasicOperator<Real> conditional_expectation(const BasicPartition<Real>& part, const BasicOperator<Real>& x) {
  detail::require_same_dim<Real>(part.dim(), x.rows(), "conditional_expectation");
  BasicOperator<Real> out = BasicOperator<Real>::Zero(x.rows(), x.cols());
  for (const auto& c : part) out.noalias() += c.op() * x * c.op();
  return out;
}

template <typename Real>
struct BasicCorrelationForms {
  Real original;  // φ(AB) − φ(A)φ(B)
  Real balanced;  // φ(AB)φ(A⊥B⊥) − φ(AB⊥)φ(A⊥B)
};
using CorrelationForms = BasicCorrelationForms<double>;

namespace detail {

// Joint probabilities (AB, AB⊥, A⊥B, A⊥B⊥) of an unnormalized positive operator, divided by `norm`.
template <typename Real>
std::array<Real, 4> joint_probabilities(const BasicOperator<Real>& rho, const BasicEventPair<Real>& pair, Real norm) {
  const auto x = pair.joint_events();
  std::array<Real, 4> q{};
  for (int i = 0; i < 4; ++i) q[i] = trace_product<Real>(rho, x[i]).real() / norm;
  return q;
}

template <typename Real>
BasicCorrelationForms<Real> forms_from_joint(const std::array<Real, 4>& q) {
  const Real pa = q[0] + q[1];
  const Real pb = q[0] + q[2];
  return {q[0] - pa * pb, q[0] * q[3] - q[1] * q[2]};
}

}  // namespace detail

template <typename Real>
BasicCorrelationForms<Real> correlation(const BasicDensityState<Real>& s, const BasicEventPair<Real>& pair) {
  detail::require_same_dim<Real>(s.dim(), pair.dim(), "correlation");
  return detail::forms_from_joint(detail::joint_probabilities<Real>(s.rho(), pair, Real(1)));
}

template <typename Real>
BasicCorrelationForms<Real> conditional_correlation(const BasicDensityState<Real>& s, const BasicEventPair<Real>& pair,
                                                    const BasicProjection<Real>& c,
                                                    const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), pair.dim(), "conditional_correlation");
  detail::require_same_dim<Real>(s.dim(), c.dim(), "conditional_correlation");
  const Real p = detail::trace_product<Real>(s.rho(), c.op()).real();
  if (p <= tol.eps_prob) throw ZeroProbabilityCondition("condition has zero probability");
  const BasicOperator<Real> crc = c.op() * s.rho() * c.op();
  return detail::forms_from_joint(detail::joint_probabilities<Real>(crc, pair, p));
}

// ---------------------------------------------------------------------------
// Screening-off, determinism, LTP

template <typename Real>
struct BasicElementDiagnostics {
  std::size_t index = 0;
  Real probability = 0;
  bool zero_probability = false;
  // Conditional joint probabilities (AB, AB⊥, A⊥B, A⊥B⊥); zeros when the element has zero probability.
  std::array<Real, 4> joint{};
  BasicCorrelationForms<Real> delta{0, 0};
  bool screens = true;

  Real prob_A() const { return joint[0] + joint[1]; }
  Real prob_B() const { return joint[0] + joint[2]; }
};

template <typename Real>
struct BasicScreeningResult {
  bool is_ccs = true;
  std::vector<BasicElementDiagnostics<Real>> elements;

  std::vector<std::size_t> zero_probability_elements() const {
    std::vector<std::size_t> out;
    for (const auto& e : elements)
      if (e.zero_probability) out.push_back(e.index);
    return out;
  }
};
using ElementDiagnostics = BasicElementDiagnostics<double>;
using ScreeningResult = BasicScreeningResult<double>;

template <typename Real>
BasicScreeningResult<Real> is_ccs(const BasicDensityState<Real>& s, const BasicPartition<Real>& part,
                                  const BasicEventPair<Real>& pair, const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), part.dim(), "is_ccs");
  detail::require_same_dim<Real>(s.dim(), pair.dim(), "is_ccs");
  BasicScreeningResult<Real> out;
  for (std::size_t k = 0; k < part.size(); ++k) {
    BasicElementDiagnostics<Real> e;
    e.index = k;
    const auto& c = part[k].op();
    e.probability = detail::trace_product<Real>(s.rho(), c).real();
    if (e.probability <= tol.eps_prob) {
      e.zero_probability = true;
    } else {
      const BasicOperator<Real> crc = c * s.rho() * c;
      e.joint = detail::joint_probabilities<Real>(crc, pair, e.probability);
      e.delta = detail::forms_from_joint(e.joint);
      e.screens = std::abs(e.delta.original) <= tol.eps_eq;
      out.is_ccs = out.is_ccs && e.screens;
    }
    out.elements.push_back(e);
  }
  return out;
}

namespace detail {

template <typename Real>
bool near_zero_or_one(Real x, Real eps) {
  return std::abs(x) <= eps || std::abs(x - 1) <= eps;
}

}  // namespace detail

template <typename Real>
struct BasicDeterminismCheck {
  bool conditional_form = true;  // φ(A|C_k), φ(B|C_k) ∈ {0,1}
  bool joint_form = true;        // φ(X|C_k) ∈ {0,1} for the four joint events
};
using DeterminismCheck = BasicDeterminismCheck<double>;

// Both determinism criteria; throws NotACCS when the partition does not screen off.
template <typename Real>
BasicDeterminismCheck<Real> determinism_check(const BasicDensityState<Real>& s, const BasicPartition<Real>& part,
                                              const BasicEventPair<Real>& pair, const BasicTolerance<Real>& tol = {}) {
  const auto scr = is_ccs(s, part, pair, tol);
  if (!scr.is_ccs) throw NotACCS("partition does not screen off the correlation");
  BasicDeterminismCheck<Real> out;
  for (const auto& e : scr.elements) {
    if (e.zero_probability) continue;
    out.conditional_form = out.conditional_form && detail::near_zero_or_one(e.prob_A(), tol.eps_eq) &&
                           detail::near_zero_or_one(e.prob_B(), tol.eps_eq);
    for (Real q : e.joint) out.joint_form = out.joint_form && detail::near_zero_or_one(q, tol.eps_eq);
  }
  return out;
}

template <typename Real>
bool is_deterministic_ccs(const BasicDensityState<Real>& s, const BasicPartition<Real>& part,
                          const BasicEventPair<Real>& pair, const BasicTolerance<Real>& tol = {}) {
  return determinism_check(s, part, pair, tol).conditional_form;
}

template <typename Real>
struct BasicLtpResult {
  bool holds = true;
  std::array<Real, 4> residuals{};  // Tr(E(ρ)X) − Tr(ρX) for AB, AB⊥, A⊥B, A⊥B⊥
};
using LtpResult = BasicLtpResult<double>;

template <typename Real>
BasicLtpResult<Real> satisfies_ltp(const BasicDensityState<Real>& s, const BasicPartition<Real>& part,
                                   const BasicEventPair<Real>& pair, const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), part.dim(), "satisfies_ltp");
  detail::require_same_dim<Real>(s.dim(), pair.dim(), "satisfies_ltp");
  const BasicOperator<Real> e_rho = conditional_expectation(part, s.rho());
  const auto x = pair.joint_events();
  BasicLtpResult<Real> out;
  for (int i = 0; i < 4; ++i) {
    out.residuals[i] = detail::trace_product<Real>(e_rho, x[i]).real() - detail::trace_product<Real>(s.rho(), x[i]).real();
    out.holds = out.holds && std::abs(out.residuals[i]) <= tol.eps_eq;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commutation and correlation classes

enum class CommutationClass { Commuting, WeaklyCommuting, Noncommuting };

inline std::string_view to_string(CommutationClass c) {
  switch (c) {
    case CommutationClass::Commuting: return "Commuting";
    case CommutationClass::WeaklyCommuting: return "WeaklyCommuting";
    case CommutationClass::Noncommuting: return "Noncommuting";
  }
  return "?";
}

template <typename Real>
bool commutes_with_pair(const BasicProjection<Real>& c, const BasicEventPair<Real>& pair, Real eps) {
  const auto& x = c.op();
  const auto& a = pair.A().op();
  const auto& b = pair.B().op();
  return detail::approx_zero<Real>(a * x - x * a, eps) && detail::approx_zero<Real>(b * x - x * b, eps);
}

template <typename Real>
CommutationClass commutation_class(const BasicPartition<Real>& part, const BasicEventPair<Real>& pair,
                                   const std::optional<BasicDensityState<Real>>& s = std::nullopt,
                                   const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(part.dim(), pair.dim(), "commutation_class");
  if (s) detail::require_same_dim<Real>(part.dim(), s->dim(), "commutation_class");
  bool all = true;
  bool relevant = true;
  for (const auto& c : part) {
    if (commutes_with_pair(c, pair, tol.eps_eq)) continue;
    all = false;
    if (!s || detail::trace_product<Real>(s->rho(), c.op()).real() > tol.eps_prob) relevant = false;
  }
  if (all) return CommutationClass::Commuting;
  return relevant ? CommutationClass::WeaklyCommuting : CommutationClass::Noncommuting;
}

// |φ(DX)|, |φ(XD)| ≤ eps for D the sum of zero-probability elements.
template <typename Real>
bool zero_probability_part_vanishes(const BasicDensityState<Real>& s, const BasicPartition<Real>& part,
                       const BasicEventPair<Real>& pair, const BasicTolerance<Real>& tol = {}) {
  if (commutation_class(part, pair, std::optional<BasicDensityState<Real>>(s), tol) == CommutationClass::Noncommuting)
    throw PreconditionViolated("partition is not weakly commuting under the state");
  const Index d = s.dim();
  BasicOperator<Real> dop = BasicOperator<Real>::Zero(d, d);
  for (const auto& c : part)
    if (detail::trace_product<Real>(s.rho(), c.op()).real() <= tol.eps_prob) dop += c.op();
  for (const auto& x : pair.joint_events()) {
    const BasicOperator<Real> dx = dop * x;
    const BasicOperator<Real> xd = x * dop;
    if (std::abs(detail::trace_product<Real>(s.rho(), dx)) > tol.eps_eq) return false;
    if (std::abs(detail::trace_product<Real>(s.rho(), xd)) > tol.eps_eq) return false;
  }
  return true;
}

enum class CorrelationClass {
  Uncorrelated,
  Correlated,
  PerfectlyCorrelated,
  MaximallyCorrelated,
  PerfectlyAnticorrelated,
  MaximallyAnticorrelated
};

inline std::string_view to_string(CorrelationClass c) {
  switch (c) {
    case CorrelationClass::Uncorrelated: return "Uncorrelated";
    case CorrelationClass::Correlated: return "Correlated";
    case CorrelationClass::PerfectlyCorrelated: return "PerfectlyCorrelated";
    case CorrelationClass::MaximallyCorrelated: return "MaximallyCorrelated";
    case CorrelationClass::PerfectlyAnticorrelated: return "PerfectlyAnticorrelated";
    case CorrelationClass::MaximallyAnticorrelated: return "MaximallyAnticorrelated";
  }
  return "?";
}

inline bool is_perfect(CorrelationClass c) {
  return c == CorrelationClass::PerfectlyCorrelated || c == CorrelationClass::MaximallyCorrelated;
}

template <typename Real>
CorrelationClass correlation_class(const BasicDensityState<Real>& s, const BasicEventPair<Real>& pair,
                                   const BasicTolerance<Real>& tol = {}) {
  detail::require_same_dim<Real>(s.dim(), pair.dim(), "correlation_class");
  const auto q = detail::joint_probabilities<Real>(s.rho(), pair, Real(1));
  const Real eps = tol.eps_eq;
  const Real half = Real(1) / 2;
  if (std::abs(q[1]) <= eps && std::abs(q[2]) <= eps)
    return std::abs(q[0] - half) <= eps ? CorrelationClass::MaximallyCorrelated : CorrelationClass::PerfectlyCorrelated;
  if (std::abs(q[0]) <= eps && std::abs(q[3]) <= eps)
    return std::abs(q[1] - half) <= eps ? CorrelationClass::MaximallyAnticorrelated
                                        : CorrelationClass::PerfectlyAnticorrelated;
  return std::abs(detail::forms_from_joint(q).original) <= eps ? CorrelationClass::Uncorrelated
                                                                : CorrelationClass::Correlated;
}

}  // namespace ccs
