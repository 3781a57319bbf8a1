#include "ccs/golden.hpp"

#include <cmath>
#include <sstream>

#include "ccs/ltp_solver.hpp"

namespace ccs::golden {

using families::Expect;
using families::FamilyId;
using families::FamilyParams;
using families::TrivialityLevel;

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Pass: return "PASS";
    case CellStatus::Fail: return "FAIL";
    case CellStatus::Skipped: return "SKIPPED";
    case CellStatus::NotApplicable: return "NA";
  }
  return "?";
}

std::vector<GoldenCase> default_grid() {
  std::vector<GoldenCase> out;
  for (FamilyId id : {FamilyId::TrivAB2, FamilyId::TrivAB4, FamilyId::CCSclass, FamilyId::CCSGabor,
                      FamilyId::CCSclassUspec, FamilyId::CCStwistLTPspec})
    out.push_back({id, {}, "-"});

  FamilyParams cltp;
  cltp.a = Complex(std::sqrt(0.7), 0);
  cltp.b = Complex(0, std::sqrt(0.3));
  out.push_back({FamilyId::CLTP, cltp, "a=sqrt(0.7), b=i*sqrt(0.3)"});

  const std::vector<std::pair<double, std::string>> thetas{
      {0.0, "0"},          {M_PI / 6, "pi/6"},         {M_PI / 4, "pi/4"}, {M_PI / 3, "pi/3"},
      {M_PI / 2, "pi/2"},  {2 * M_PI / 3, "2pi/3"},    {M_PI, "pi"}};
  for (FamilyId id : {FamilyId::CCSclassU, FamilyId::CCStwist, FamilyId::CCSBell, FamilyId::CCSntrat,
                      FamilyId::CCSntratU, FamilyId::CCS22ntrat, FamilyId::CCS22ntratU})
    for (const auto& [t, name] : thetas) out.push_back({id, FamilyParams::with_theta(t), "theta=" + name});

  for (auto [xi, zeta] : std::vector<std::pair<double, double>>{{0, 0}, {1, -0.5}, {2, 3}}) {
    FamilyParams p;
    p.xi = xi;
    p.zeta = zeta;
    std::ostringstream label;
    label << "xi=" << xi << ", zeta=" << zeta;
    out.push_back({FamilyId::CCShyper, p, label.str()});
  }

  const double h = 1 / std::sqrt(2.0);
  const std::vector<std::tuple<Complex, Complex, std::string>> cs{
      {1.0, 0.0, "c=1, s=0"}, {h, h, "c=s=1/sqrt2"}, {h, Complex(0, h), "c=1/sqrt2, s=i/sqrt2"}};
  const std::vector<std::pair<twoqubit::PerfectCorrParams, std::string>> rs{{{1, 0, 0}, "r=(1,0,0)"},
                                                                             {{0.6, 0.3, 0.2}, "r=(0.6,0.3,0.2)"}};
  for (FamilyId id : {FamilyId::CCSntratC, FamilyId::CCS22ntratC})
    for (const auto& [c, s, cl] : cs)
      for (const auto& [r, rl] : rs) {
        FamilyParams p;
        p.c = c;
        p.s = s;
        p.r = r;
        out.push_back({id, p, cl + ", " + rl});
      }
  return out;
}

namespace {

std::string_view expect_of(bool b) { return b ? "yes" : "no"; }

std::string_view product_expect(ProductClass p) {
  switch (p) {
    case ProductClass::AllProduct: return "yes";
    case ProductClass::SomeNonproduct: return "no";
    case ProductClass::NotApplicable: return "n/a";
  }
  return "?";
}

std::string residual_text(const std::array<double, 4>& r) {
  std::ostringstream s;
  s.precision(3);
  s << "residuals [" << r[0] << ", " << r[1] << ", " << r[2] << ", " << r[3] << "]";
  return s.str();
}

DensityState generic_state(const SamplerConfig& cfg) {
  auto rng = stream_engine(cfg.seed, Stream::Golden, 0);
  return ginibre_state(4, rng);
}

DensityState ltp_state(const GoldenCase& c, const families::FamilyInstance& inst, const DensityState& generic) {
  switch (c.id) {
    case FamilyId::CCSclassU:
    case FamilyId::CCStwist: {
      const auto sol = ltp::solve_state_params(*c.params.theta);
      return DensityState::from_pure(c.id == FamilyId::CCSclassU ? families::classU_ltp_state(sol.a, sol.b)
                                                                 : families::twist_ltp_state(sol.a, sol.b));
    }
    case FamilyId::CCSGabor: {
      const auto sol = ltp::solve_state_params(M_PI / 2);
      return DensityState::from_pure(families::classU_ltp_state(sol.a, sol.b));
    }
    default:
      return inst.state ? *inst.state : generic;
  }
}

}  // namespace

std::vector<Cell> run_golden(const std::vector<GoldenCase>& cases, const SamplerConfig& cfg, const Tolerance& tol,
                             const Generator& generator) {
  std::vector<Cell> cells;
  const EventPair pair = twoqubit::canonical_events();
  const DensityState generic = generic_state(cfg);
  const DensityState perfect = twoqubit::perfect_correlation_state({0.3, 0.2, 0.1}, tol);
  ClassifyOptions opts;
  opts.tol = tol;

  for (const auto& c : cases) {
    const std::string family(families::to_string(c.id));
    const auto add = [&](std::string column, std::string_view expected, std::string_view actual, CellStatus status,
                         std::string detail = {}) {
      cells.push_back({family, c.label, std::move(column), std::string(expected), std::string(actual), status,
                       std::move(detail)});
    };
    const auto compare = [&](std::string column, std::string_view expected, std::string_view actual,
                             std::string detail = {}) {
      add(std::move(column), expected, actual, expected == actual ? CellStatus::Pass : CellStatus::Fail,
          std::move(detail));
    };

    const auto expected = families::expected_table_row(c.id, c.params);
    std::optional<families::FamilyInstance> inst;
    try {
      inst = generator(c.id, c.params, tol);
    } catch (const Error& e) {
      add("generate", "ok", "error", CellStatus::Fail, e.what());
      continue;
    }
    const DensityState state = families::is_state_specific(c.id) && inst->state ? *inst->state : generic;
    const CCSReport rep = classify(inst->partition, pair, state, cfg, opts);

    compare("ccs", families::to_string(expected.ccs), expect_of(rep.is_ccs));
    compare("atomic", expect_of(expected.atomic), expect_of(rep.atomic));
    compare("commuting", ccs::to_string(expected.commuting), ccs::to_string(rep.commutation));
    if (expected.product == Expect::NotApplicable)
      add("product", "n/a", product_expect(rep.product), CellStatus::NotApplicable);
    else
      compare("product", families::to_string(expected.product), product_expect(rep.product));
    if (expected.triviality == TrivialityLevel::NotApplicable) {
      add("triviality", "n/a", ccs::to_string(rep.triviality), CellStatus::NotApplicable);
    } else {
      std::string detail;
      if (rep.certificate) detail = std::string(ccs::to_string(rep.certificate->kind)) + ": " + rep.certificate->mechanism;
      compare("triviality", families::to_string(expected.triviality), ccs::to_string(rep.triviality), detail);
    }

    if (expected.ltp == Expect::Unresolved) {
      const auto res = satisfies_ltp(generic, inst->partition, pair, tol);
      add("ltp", "unresolved", expect_of(res.holds), CellStatus::Skipped, "generic state " + residual_text(res.residuals));
    } else {
      const auto res = satisfies_ltp(ltp_state(c, *inst, generic), inst->partition, pair, tol);
      compare("ltp", families::to_string(expected.ltp), expect_of(res.holds), residual_text(res.residuals));
    }

    if (expected.deterministic == Expect::NotApplicable) {
      add("deterministic", "n/a", "-", CellStatus::NotApplicable);
    } else {
      const DensityState& ds = families::is_state_specific(c.id) && inst->state ? *inst->state : perfect;
      std::string_view actual = "NotACCS";
      if (is_ccs(ds, inst->partition, pair, tol).is_ccs)
        actual = expect_of(is_deterministic_ccs(ds, inst->partition, pair, tol));
      compare("deterministic", families::to_string(expected.deterministic), actual);
    }
  }
  return cells;
}

GoldenSummary summarize(const std::vector<Cell>& cells) {
  GoldenSummary s;
  for (const auto& c : cells) {
    switch (c.status) {
      case CellStatus::Pass: ++s.pass; break;
      case CellStatus::Fail: ++s.fail; break;
      case CellStatus::Skipped: ++s.skipped; break;
      case CellStatus::NotApplicable: ++s.not_applicable; break;
    }
  }
  return s;
}

}  // namespace ccs::golden
