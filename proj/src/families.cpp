#include "ccs/families.hpp"

#include <array>
#include <cmath>

namespace ccs::families {

namespace {

using twoqubit::PerfectCorrParams;

constexpr std::array<FamilyInfo, 17> kCatalog{{
    {FamilyId::TrivAB2, "TrivAB2", "", "", "{A, A⊥} for the canonical events"},
    {FamilyId::TrivAB4, "TrivAB4", "", "", "{AB, AB⊥, A⊥B, A⊥B⊥} for the canonical events"},
    {FamilyId::CCSclass, "CCSclass", "", "", "computational basis |00⟩, |01⟩, |10⟩, |11⟩"},
    {FamilyId::CCSGabor, "CCSGabor", "", "", "|++⟩, |+−⟩, |−+⟩, |−−⟩"},
    {FamilyId::CCSclassU, "CCSclassU", "theta", "a, b (real)", "U_θ⊗U_θ rotated computational basis"},
    {FamilyId::CCStwist, "CCStwist", "theta", "a, b (real)", "CCSclassU twisted by V = diag(1,1,1,−1)"},
    {FamilyId::CCSBell, "CCSBell", "theta", "", "c|0±⟩ ± s|1∓⟩ type nonproduct basis"},
    {FamilyId::CCShyper, "CCShyper", "xi, zeta", "", "exponentially parametrized nonproduct basis"},
    {FamilyId::CCSntrat, "CCSntrat", "theta", "", "|00⟩, c|01⟩+s|10⟩, −s|01⟩+c|10⟩, |11⟩ (state Bell0)"},
    {FamilyId::CCSntratU, "CCSntratU", "theta", "", "U⊗U image of CCSntrat (state Bell0)"},
    {FamilyId::CCS22ntrat, "CCS22ntrat", "theta", "", "rank-two grouping of CCSntrat (state Bell0)"},
    {FamilyId::CCS22ntratU, "CCS22ntratU", "theta", "", "rank-two grouping of CCSntratU (state Bell0)"},
    {FamilyId::CLTP, "CLTP", "", "a, b", "non-CCS partition obeying LTP for (a,b,b,a)/√2"},
    {FamilyId::CCSclassUspec, "CCSclassUspec", "", "", "CCSclassU at θ = π/4 with its LTP state"},
    {FamilyId::CCStwistLTPspec, "CCStwistLTPspec", "", "", "CCStwist at θ = π/4 with its LTP state"},
    {FamilyId::CCSntratC, "CCSntratC", "c, s", "r1, r2, r3", "complex CCSntrat (perfect-correlation state)"},
    {FamilyId::CCS22ntratC, "CCS22ntratC", "c, s", "r1, r2, r3", "complex CCS22ntrat (perfect-correlation state)"},
}};

Ket vec4(Complex a, Complex b, Complex c, Complex d) {
  Ket v(4);
  v << a, b, c, d;
  return v;
}

double require_real(const std::optional<double>& x, const char* name) {
  if (!x) throw MissingParameter(std::string("missing parameter ") + name);
  if (!std::isfinite(*x)) throw DomainError(std::string("parameter ") + name + " is not finite");
  return *x;
}

double require_theta(const FamilyParams& p) {
  const double t = require_real(p.theta, "theta");
  if (t < 0 || t >= 2 * M_PI) throw DomainError("theta must lie in [0, 2π)");
  return t;
}

double require_hyper(const std::optional<double>& x, const char* name) {
  const double v = require_real(x, name);
  if (v < -10 || v > 10) throw DomainError(std::string("parameter ") + name + " must lie in [−10, 10]");
  return v;
}

std::pair<Complex, Complex> require_pair(const std::optional<Complex>& x, const std::optional<Complex>& y,
                                         const char* names, const Tolerance& tol) {
  if (!x || !y) throw MissingParameter(std::string("missing parameters ") + names);
  if (!std::isfinite(x->real()) || !std::isfinite(x->imag()) || !std::isfinite(y->real()) ||
      !std::isfinite(y->imag()))
    throw DomainError(std::string("parameters ") + names + " are not finite");
  if (std::abs(std::norm(*x) + std::norm(*y) - 1) > tol.eps_eq)
    throw NormalizationViolation(std::string("parameters ") + names + " violate |x|²+|y|² = 1");
  return {*x, *y};
}

std::pair<double, double> require_real_pair(const FamilyParams& p, const Tolerance& tol) {
  const auto [a, b] = require_pair(p.a, p.b, "a, b", tol);
  if (std::abs(a.imag()) > tol.eps_eq || std::abs(b.imag()) > tol.eps_eq)
    throw DomainError("state parameters a, b must be real for this family");
  return {a.real(), b.real()};
}

std::vector<Ket> class_u_vectors(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {vec4(c * c, c * s, s * c, s * s), vec4(-c * s, c * c, -s * s, s * c), vec4(-s * c, -s * s, c * c, c * s),
          vec4(s * s, -s * c, -c * s, c * c)};
}

std::vector<Ket> twisted(std::vector<Ket> vs) {
  for (auto& v : vs) v(3) = -v(3);
  return vs;
}

std::vector<Ket> bell_vectors(double theta) {
  const double c = std::cos(theta / 2) * M_SQRT1_2;
  const double s = std::sin(theta / 2) * M_SQRT1_2;
  return {vec4(c, c, -s, s), vec4(-c, c, s, s), vec4(-s, s, -c, -c), vec4(s, s, c, -c)};
}

std::vector<Ket> hyper_vectors(double xi, double zeta) {
  const double n = 1 / std::sqrt(2 * (std::cosh(xi) + std::cosh(zeta)));
  const double ep = std::exp(xi / 2), em = std::exp(-xi / 2);
  const double zp = std::exp(zeta / 2), zm = std::exp(-zeta / 2);
  return {n * vec4(ep, zp, zm, -em), n * vec4(em, zm, -zp, ep), n * vec4(zp, -ep, em, zm),
          n * vec4(-zm, em, ep, zp)};
}

std::vector<Ket> ntrat_complex_vectors(Complex c, Complex s) {
  return {vec4(1, 0, 0, 0), vec4(0, c, s, 0), vec4(0, -std::conj(s), std::conj(c), 0), vec4(0, 0, 0, 1)};
}

std::vector<Ket> ntrat_vectors(double theta) {
  return ntrat_complex_vectors(std::cos(theta / 2), std::sin(theta / 2));
}

std::vector<Ket> ntrat_u_vectors(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Ket p = twoqubit::qubit_plus();
  const Ket m = twoqubit::qubit_minus();
  const Ket pp = twoqubit::product(p, p), pm = twoqubit::product(p, m);
  const Ket mp = twoqubit::product(m, p), mm = twoqubit::product(m, m);
  return {pp, c * pm + s * mp, -s * pm + c * mp, mm};
}

std::vector<Ket> cltp_vectors() {
  const Complex i(0, 1);
  const double h = M_SQRT1_2;
  return {h * vec4(1, 0, 0, i), h * vec4(0, i, 1, 0), h * vec4(0, i, -1, 0), h * vec4(1, 0, 0, -i)};
}

std::vector<Ket> class_u_spec_vectors() {
  const double r = std::sqrt(2.0);
  const double k = 1 / (2 * r);
  return {k * vec4(r + 1, 1, 1, r - 1), k * vec4(-1, r + 1, -(r - 1), 1), k * vec4(-1, -(r - 1), r + 1, 1),
          k * vec4(r - 1, -1, -1, r + 1)};
}

Partition rank_two(const std::vector<Ket>& g, const Tolerance& tol) {
  return Partition({Projection::span({g[0], g[1]}, tol), Projection::span({g[2], g[3]}, tol)}, tol);
}

PerfectCorrParams require_r(const FamilyParams& p) { return p.r.value_or(PerfectCorrParams{}); }

}  // namespace

std::string_view to_string(FamilyId id) { return info(id).name; }

const FamilyInfo& info(FamilyId id) { return kCatalog.at(static_cast<std::size_t>(id)); }

std::optional<FamilyId> parse_family(std::string_view name) {
  for (const auto& f : kCatalog)
    if (f.name == name) return f.id;
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& f : kCatalog) v.push_back(f.id);
    return v;
  }();
  return ids;
}

Operator rotation(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Operator u(2, 2);
  u << c, -s, s, c;
  return u;
}

Operator hadamard_like() { return rotation(M_PI / 2); }

Ket bell0() { return vec4(M_SQRT1_2, 0, 0, M_SQRT1_2); }

Ket cltp_state(Complex a, Complex b) { return M_SQRT1_2 * vec4(a, b, b, a); }

Ket classU_ltp_state(double a, double b) { return M_SQRT1_2 * vec4(a, b, b, -a); }

Ket twist_ltp_state(double a, double b) { return M_SQRT1_2 * vec4(a, b, b, a); }

Ket classU_ltp_state_spec() {
  const double r5 = std::sqrt(5.0);
  const double k = 1 / (2 * std::pow(5.0, 0.25));
  const double p = std::sqrt(r5 + 1), m = std::sqrt(r5 - 1);
  return k * vec4(p, m, m, -p);
}

Ket twist_ltp_state_spec() {
  Ket v = classU_ltp_state_spec();
  v(3) = -v(3);
  return v;
}

bool is_state_specific(FamilyId id) {
  switch (id) {
    case FamilyId::CCSntrat:
    case FamilyId::CCSntratU:
    case FamilyId::CCS22ntrat:
    case FamilyId::CCS22ntratU:
    case FamilyId::CLTP:
    case FamilyId::CCSclassUspec:
    case FamilyId::CCStwistLTPspec:
    case FamilyId::CCSntratC:
    case FamilyId::CCS22ntratC:
      return true;
    default:
      return false;
  }
}

FamilyInstance generate(FamilyId id, const FamilyParams& p, const Tolerance& tol) {
  std::vector<Ket> vs;
  bool rank_two_family = false;
  switch (id) {
    case FamilyId::TrivAB2:
    case FamilyId::TrivAB4:
    case FamilyId::CCSclass:
      vs = {twoqubit::basis(0, 0), twoqubit::basis(0, 1), twoqubit::basis(1, 0), twoqubit::basis(1, 1)};
      rank_two_family = id == FamilyId::TrivAB2;
      break;
    case FamilyId::CCSGabor:
      vs = {0.5 * vec4(1, 1, 1, 1), 0.5 * vec4(-1, 1, -1, 1), 0.5 * vec4(-1, -1, 1, 1), 0.5 * vec4(1, -1, -1, 1)};
      break;
    case FamilyId::CCSclassU:
      vs = class_u_vectors(require_theta(p));
      break;
    case FamilyId::CCStwist:
      vs = twisted(class_u_vectors(require_theta(p)));
      break;
    case FamilyId::CCSBell:
      vs = bell_vectors(require_theta(p));
      break;
    case FamilyId::CCShyper:
      vs = hyper_vectors(require_hyper(p.xi, "xi"), require_hyper(p.zeta, "zeta"));
      break;
    case FamilyId::CCSntrat:
      vs = ntrat_vectors(require_theta(p));
      break;
    case FamilyId::CCSntratU:
      vs = ntrat_u_vectors(require_theta(p));
      break;
    case FamilyId::CCS22ntrat:
      vs = ntrat_vectors(require_theta(p));
      rank_two_family = true;
      break;
    case FamilyId::CCS22ntratU:
      vs = ntrat_u_vectors(require_theta(p));
      rank_two_family = true;
      break;
    case FamilyId::CLTP:
      vs = cltp_vectors();
      break;
    case FamilyId::CCSclassUspec:
      vs = class_u_spec_vectors();
      break;
    case FamilyId::CCStwistLTPspec:
      vs = twisted(class_u_spec_vectors());
      break;
    case FamilyId::CCSntratC:
    case FamilyId::CCS22ntratC: {
      const auto [c, s] = require_pair(p.c, p.s, "c, s", tol);
      vs = ntrat_complex_vectors(c, s);
      rank_two_family = id == FamilyId::CCS22ntratC;
      break;
    }
  }

  std::optional<DensityState> state;
  try {
    state = associated_state(id, p, tol);
  } catch (const NoAssociatedState&) {
  } catch (const MissingParameter&) {
  }

  if (rank_two_family)
    return FamilyInstance{id, rank_two(vs, tol), false, std::move(state), std::move(vs)};
  Partition part = Partition::from_atoms(vs, tol);
  return FamilyInstance{id, std::move(part), true, std::move(state), std::move(vs)};
}

DensityState associated_state(FamilyId id, const FamilyParams& p, const Tolerance& tol) {
  switch (id) {
    case FamilyId::CCSntrat:
    case FamilyId::CCSntratU:
    case FamilyId::CCS22ntrat:
    case FamilyId::CCS22ntratU:
      return DensityState::from_pure(bell0());
    case FamilyId::CLTP: {
      const auto [a, b] = require_pair(p.a, p.b, "a, b", tol);
      return DensityState::from_pure(cltp_state(a, b));
    }
    case FamilyId::CCSclassUspec:
      return DensityState::from_pure(classU_ltp_state_spec());
    case FamilyId::CCStwistLTPspec:
      return DensityState::from_pure(twist_ltp_state_spec());
    case FamilyId::CCSntratC:
    case FamilyId::CCS22ntratC:
      return twoqubit::perfect_correlation_state(require_r(p), tol);
    case FamilyId::CCSclassU:
    case FamilyId::CCStwist:
      if (p.a || p.b) {
        const auto [a, b] = require_real_pair(p, tol);
        return DensityState::from_pure(id == FamilyId::CCSclassU ? classU_ltp_state(a, b) : twist_ltp_state(a, b));
      }
      [[fallthrough]];
    default:
      throw NoAssociatedState(std::string(to_string(id)) + " has no associated state");
  }
}

std::string_view to_string(Expect e) {
  switch (e) {
    case Expect::Yes: return "yes";
    case Expect::No: return "no";
    case Expect::NotApplicable: return "n/a";
    case Expect::Unresolved: return "unresolved";
  }
  return "?";
}

std::string_view to_string(TrivialityLevel t) {
  switch (t) {
    case TrivialityLevel::Strong: return "Strong";
    case TrivialityLevel::Weak: return "Weak";
    case TrivialityLevel::Nontrivial: return "Nontrivial";
    case TrivialityLevel::NotApplicable: return "n/a";
  }
  return "?";
}

bool theta_in_pi_z(double theta, double eps) {
  const double k = std::round(theta / M_PI);
  return std::abs(theta - k * M_PI) <= eps;
}

TableRow expected_table_row(FamilyId id, const FamilyParams& p) {
  using CC = CommutationClass;
  using TL = TrivialityLevel;
  const auto yes_if = [](bool b) { return b ? Expect::Yes : Expect::No; };
  const bool piz = p.theta && theta_in_pi_z(*p.theta);
  const bool cs0 = p.c && p.s && (std::abs(*p.c) <= 1e-12 || std::abs(*p.s) <= 1e-12);

  TableRow r;
  switch (id) {
    case FamilyId::TrivAB2:
      r = {Expect::Yes, false, false, CC::Commuting, Expect::NotApplicable, TL::Weak, Expect::Yes, Expect::Yes};
      break;
    case FamilyId::TrivAB4:
    case FamilyId::CCSclass:
      r = {Expect::Yes, false, true, CC::Commuting, Expect::Yes, TL::Strong, Expect::Yes, Expect::Yes};
      break;
    case FamilyId::CCSGabor:
      r = {Expect::Yes, false, true, CC::Noncommuting, Expect::Yes, TL::Strong, Expect::Yes, Expect::No};
      break;
    case FamilyId::CCSclassU:
      r = {Expect::Yes, false, true, piz ? CC::Commuting : CC::Noncommuting, Expect::Yes, TL::Strong, Expect::Yes,
           yes_if(piz)};
      break;
    case FamilyId::CCStwist:
      r = {Expect::Yes, false, true, piz ? CC::Commuting : CC::Noncommuting, yes_if(piz), piz ? TL::Strong : TL::Weak,
           Expect::Yes, yes_if(piz)};
      break;
    case FamilyId::CCSBell:
      r = {Expect::Yes, false, true, CC::Noncommuting, yes_if(piz), piz ? TL::Strong : TL::Weak, Expect::Unresolved,
           Expect::No};
      break;
    case FamilyId::CCShyper:
      r = {Expect::Yes, false, true, CC::Noncommuting, Expect::No, TL::Weak, Expect::Unresolved, Expect::No};
      break;
    case FamilyId::CCSntrat:
      r = {Expect::Yes, true, true, piz ? CC::Commuting : CC::WeaklyCommuting, yes_if(piz),
           piz ? TL::Strong : TL::Nontrivial, Expect::Yes, Expect::Yes};
      break;
    case FamilyId::CCSntratU:
      r = {Expect::Yes, true, true, CC::Noncommuting, yes_if(piz), piz ? TL::Strong : TL::Nontrivial, Expect::No,
           Expect::No};
      break;
    case FamilyId::CCS22ntrat:
      r = {Expect::Yes, true, false, piz ? CC::Commuting : CC::Noncommuting, Expect::NotApplicable,
           piz ? TL::Weak : TL::Nontrivial, Expect::Yes, Expect::Yes};
      break;
    case FamilyId::CCS22ntratU:
      r = {Expect::Yes, true, false, CC::Noncommuting, Expect::NotApplicable, piz ? TL::Weak : TL::Nontrivial,
           Expect::No, Expect::No};
      break;
    case FamilyId::CLTP:
      r = {Expect::No, false, true, CC::Noncommuting, Expect::No, TL::NotApplicable, Expect::Yes,
           Expect::NotApplicable};
      break;
    case FamilyId::CCSclassUspec:
      r = {Expect::Yes, false, true, CC::Noncommuting, Expect::Yes, TL::Strong, Expect::Yes, Expect::No};
      break;
    case FamilyId::CCStwistLTPspec:
      r = {Expect::Yes, false, true, CC::Noncommuting, Expect::No, TL::Weak, Expect::Yes, Expect::No};
      break;
    case FamilyId::CCSntratC:
      r = {Expect::Yes, true, true, cs0 ? CC::Commuting : CC::WeaklyCommuting, yes_if(cs0),
           cs0 ? TL::Strong : TL::Nontrivial, Expect::Yes, Expect::Yes};
      break;
    case FamilyId::CCS22ntratC:
      r = {Expect::Yes, true, false, cs0 ? CC::Commuting : CC::Noncommuting, Expect::NotApplicable,
           cs0 ? TL::Weak : TL::Nontrivial, Expect::Yes, Expect::Yes};
      break;
  }
  return r;
}

bool same_up_to_phase_and_order(const std::vector<Ket>& x, const std::vector<Ket>& y, double eps) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& v : x) {
    bool found = false;
    for (std::size_t j = 0; j < y.size() && !found; ++j) {
      if (used[j] || y[j].size() != v.size()) continue;
      if (std::abs(std::abs(v.dot(y[j])) - 1) <= eps) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ccs::families
