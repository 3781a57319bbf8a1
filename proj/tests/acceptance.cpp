#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ccs/classify.hpp"
#include "ccs/cli.hpp"
#include "ccs/families.hpp"
#include "ccs/golden.hpp"
#include "ccs/io.hpp"
#include "ccs/ltp_solver.hpp"
#include "ccs/sampler.hpp"
#include "ccs/twoqubit.hpp"

using namespace ccs;
using families::FamilyId;
using families::FamilyParams;

namespace {

constexpr double kEq = 1e-9;
constexpr double kExact = 1e-12;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double max_abs(const std::array<double, 4>& r) {
  double m = 0;
  for (double x : r) m = std::max(m, std::abs(x));
  return m;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1
Verdict golden_table() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cells = golden::run_golden(golden::default_grid(), SamplerConfig{}, Tolerance{kEq, 1e-12});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto s = golden::summarize(cells);
  for (const auto& c : cells)
    if (c.status == golden::CellStatus::Fail) {
      v.require(false, c.family + " [" + c.params + "] " + c.column + ": expected " + c.expected + ", got " + c.actual);
      break;
    }
  v.require(secs < 60, "runtime " + fmt(secs) + " s");
  if (v.pass)
    v.detail = std::to_string(s.pass) + " pass, " + std::to_string(s.skipped) + " skipped, " +
               std::to_string(s.not_applicable) + " n/a in " + fmt(secs) + " s (eps_eq 1e-9, limit 60 s)";
  return v;
}

// 2
Verdict ltp_exact_values() {
  Verdict v;
  const double t = M_PI / 4, r5 = std::sqrt(5.0);
  const auto uv = ltp::uv_coefficients(t);
  v.require(std::abs(uv.u + 0.5) <= kExact && std::abs(uv.v - 0.25) <= kExact, "(u, v) at pi/4");
  const auto sol = ltp::solve_state_params(t);
  v.require(std::abs(std::cos(sol.xi) - 1 / r5) <= kExact, "cos xi");
  v.require(std::abs(sol.a - std::sqrt((r5 + 1) / (2 * r5))) <= kExact, "a");
  v.require(std::abs(sol.b - std::sqrt((r5 - 1) / (2 * r5))) <= kExact, "b");
  const auto f = families::generate(FamilyId::CCSclassUspec, {});
  const auto res = twoqubit::ltp_check_2x2(*f.state, f.partition);
  v.require(max_abs(res.residuals) <= kExact, "LTP residual " + fmt(max_abs(res.residuals)));
  if (v.pass) v.detail = "max LTP residual " + fmt(max_abs(res.residuals)) + " (tol 1e-12)";
  return v;
}

// 3
Verdict ltp_sweep() {
  Verdict v;
  double worst = 0, worst_twist = 0;
  const auto grid = ltp::uniform_grid(0, M_PI, 1001);
  for (double t : grid) {
    const auto sol = ltp::solve_state_params(t);
    FamilyParams p = FamilyParams::with_theta(t);
    p.a = sol.a;
    p.b = sol.b;
    const auto f = families::generate(FamilyId::CCSclassU, p);
    worst = std::max(worst, max_abs(twoqubit::ltp_check_2x2(*f.state, f.partition).residuals));
    const auto tw = ltp::transport_by_V(sol);
    worst_twist = std::max(worst_twist, max_abs(twoqubit::ltp_check_2x2(tw.state, tw.partition).residuals));
  }
  v.require(worst <= kEq, "untwisted residual " + fmt(worst));
  v.require(worst_twist <= kEq, "twisted residual " + fmt(worst_twist));
  const auto s0 = ltp::solve_state_params(grid.front());
  const auto s1 = ltp::solve_state_params(grid.back());
  v.require(s0.xi == 0 && s0.a == 1 && s0.b == 0, "endpoint 0");
  v.require(std::abs(s1.xi - M_PI) <= kExact && std::abs(s1.a) <= kExact && std::abs(s1.b - 1) <= kExact, "endpoint pi");
  if (v.pass) v.detail = "max residual " + fmt(std::max(worst, worst_twist)) + " over 1001 points (tol 1e-9)";
  return v;
}

// 4
Verdict determinant_oracles() {
  Verdict v;
  const auto ab = twoqubit::canonical_events();
  int ccs_disagree = 0, ccs_true = 0, prod_disagree = 0, prod_true = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng = stream_engine(42, Stream::Partition, i);
    Partition part = haar_atomic_partition(4, rng);
    if (i % 2 == 1) {
      // Twisted local basis: screens for every state.
      const Operator u1 = haar_unitary(2, rng), u2 = haar_unitary(2, rng);
      std::vector<twoqubit::TwoQubitVector> prods;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) prods.emplace_back(twoqubit::product(u1.col(a), u2.col(b)));
      std::uniform_real_distribution<double> ph(0, 2 * M_PI);
      const double p0 = ph(rng), p1 = ph(rng), p2 = ph(rng);
      const double p3 = (i % 4 == 1) ? p1 + p2 - p0 : ph(rng);
      try {
        part = twoqubit::nonproduct_from_product(prods, {p0, p1, p2, p3});
      } catch (const PreconditionViolated&) {
        std::vector<Ket> atoms;
        for (const auto& g : prods) atoms.push_back(g.ket());
        part = Partition::from_atoms(atoms);
      }
    }
    const PureState psi(haar_ket(4, rng));
    const auto scr = is_ccs(DensityState::from_pure(psi), part, ab);
    bool det_ccs = true;
    for (std::size_t k = 0; k < 4; ++k)
      det_ccs = det_ccs && std::abs(twoqubit::screening_determinant(twoqubit::TwoQubitVector(part.atom(k)))) <= kEq;
    ccs_disagree += scr.is_ccs != det_ccs;
    ccs_true += scr.is_ccs;

    const Ket x = (i % 2 == 0) ? haar_ket(4, rng) : twoqubit::product(haar_ket(2, rng), haar_ket(2, rng));
    const bool det_prod = std::abs(twoqubit::productness_determinant(twoqubit::TwoQubitVector(x))) <= kEq;
    Eigen::JacobiSVD<Operator> svd(amplitude_matrix(x, Bipartition{}));
    const bool svd_prod = svd.singularValues()(1) <= 1e-10;
    prod_disagree += det_prod != svd_prod;
    prod_true += svd_prod;
  }
  v.require(ccs_disagree == 0, std::to_string(ccs_disagree) + " screening disagreements");
  v.require(prod_disagree == 0, std::to_string(prod_disagree) + " productness disagreements");
  v.require(ccs_true > 0 && ccs_true < 1000 && prod_true > 0 && prod_true < 1000, "degenerate sample");
  if (v.pass)
    v.detail = "0/1000 disagreements each (" + std::to_string(ccs_true) + " CCS, " + std::to_string(prod_true) +
               " product; det tol 1e-9, SVD tol 1e-10)";
  return v;
}

// 5
Verdict proposition_suite() {
  Verdict v;
  SamplerConfig cfg;
  cfg.seed = 42;
  cfg.n_states = 1000;
  const auto rep = verify_propositions(cfg);
  std::size_t met = 0;
  for (const char* name : {"CommLTP", "classmaxodet", "CCSLTPPCdeterm", "aCCSLTPPCComm", "commatomicCCSwtriv",
                           "classatomicCCSstriv"}) {
    bool found = false;
    for (const auto& r : rep.results)
      if (r.name == name) {
        found = true;
        met += r.hypotheses_met;
        v.require(r.violations == 0 && r.hypotheses_met > 0,
                  std::string(name) + ": " + std::to_string(r.violations) + " violations");
      }
    v.require(found, std::string(name) + " missing");
  }
  v.require(rep.contrast.confirmed(), "nonatomic contrast case not confirmed");
  if (v.pass) v.detail = "0 counterexamples over " + std::to_string(met) + " qualifying instances; contrast confirmed (eps_eq 1e-9)";
  return v;
}

// 6
Verdict correlation_bounds() {
  Verdict v;
  SamplerConfig cfg;
  const Sampler s(cfg, 4, Bipartition{});
  double lo = 0, hi = 0, gap = 0;
  for (std::size_t i = 0; i < 100000; ++i) {
    const DensityState st = (i % 2 == 0) ? s.mixed_state(i) : DensityState::from_pure(s.pure_state(i));
    const EventPair pr = (i % 3 == 0) ? s.commuting_pair(i) : s.product_pair(i);
    const auto f = correlation(st, pr);
    lo = std::min(lo, f.original);
    hi = std::max(hi, f.original);
    gap = std::max(gap, std::abs(f.original - f.balanced));
  }
  v.require(lo >= -0.25 - kEq && hi <= 0.25 + kEq, "range [" + fmt(lo) + ", " + fmt(hi) + "]");
  v.require(gap <= kExact, "form gap " + fmt(gap));
  const auto bell = DensityState::from_pure(families::bell0());
  const auto ab = twoqubit::canonical_events();
  v.require(std::abs(correlation(bell, ab).original - 0.25) <= kExact, "Bell maximum");
  v.require(std::abs(correlation(bell, ab.with_B_complemented()).original + 0.25) <= kExact, "Bell minimum");
  if (v.pass) v.detail = "sampled range [" + fmt(lo) + ", " + fmt(hi) + "], max form gap " + fmt(gap) + " (bound 0.25 + 1e-9, gap tol 1e-12)";
  return v;
}

// 7
Verdict reference_scalars() {
  Verdict v;
  const double r5 = std::sqrt(5.0);
  const auto ab = twoqubit::canonical_events();
  const auto special = families::generate(FamilyId::CCSclassUspec, {});
  const std::array<double, 4> q_expected{(r5 + 2) / (4 * r5), (r5 - 2) / (4 * r5), (r5 - 2) / (4 * r5),
                                         (r5 + 2) / (4 * r5)};
  for (std::size_t k = 0; k < 4; ++k)
    v.require(std::abs(probability(*special.state, special.partition[k]) - q_expected[k]) <= kExact, "q_k");
  v.require(std::abs(correlation(*special.state, ab).original - 1 / (4 * r5)) <= kExact, "Delta of the LTP state");

  Rng rng = stream_engine(42, Stream::Golden, 0);
  const DensityState generic = ginibre_state(4, rng);
  const auto table = [&](FamilyId id, const FamilyParams& p) {
    const auto f = families::generate(id, p);
    return twoqubit::conditional_probs_canonical(f.state ? *f.state : generic, f.partition);
  };
  // Expected entry, or NaN for undefined.
  const auto check = [&](const twoqubit::ConditionalTable& t, const std::array<double, 4>& ea,
                         const std::array<double, 4>& eb, std::size_t n, const std::string& what) {
    for (std::size_t k = 0; k < n; ++k) {
      if (std::isnan(ea[k])) {
        v.require(!t.entries[k].a && !t.entries[k].b, what + ": undefined entry valued");
        continue;
      }
      v.require(t.entries[k].a && std::abs(*t.entries[k].a - ea[k]) <= kExact, what + ": phi(A|C_k)");
      v.require(t.entries[k].b && std::abs(*t.entries[k].b - eb[k]) <= kExact, what + ": phi(B|C_k)");
    }
  };
  const double nan = std::nan("");
  int tables = 0;
  for (double t : {0.0, M_PI / 6, M_PI / 4, M_PI / 3, M_PI / 2, 2 * M_PI / 3, M_PI}) {
    const double c2 = std::pow(std::cos(t / 2), 2), s2 = std::pow(std::sin(t / 2), 2);
    const auto p = FamilyParams::with_theta(t);
    check(table(FamilyId::CCSclassU, p), {c2, c2, s2, s2}, {c2, s2, c2, s2}, 4, "CCSclassU");
    check(table(FamilyId::CCStwist, p), {c2, c2, s2, s2}, {c2, s2, c2, s2}, 4, "CCStwist");
    check(table(FamilyId::CCSBell, p), {c2, c2, s2, s2}, {0.5, 0.5, 0.5, 0.5}, 4, "CCSBell");
    check(table(FamilyId::CCSntrat, p), {1, nan, nan, 0}, {1, nan, nan, 0}, 4, "CCSntrat");
    check(table(FamilyId::CCSntratU, p), {0.5, nan, nan, 0.5}, {0.5, nan, nan, 0.5}, 4, "CCSntratU");
    check(table(FamilyId::CCS22ntrat, p), {1, 0}, {1, 0}, 2, "CCS22ntrat");
    check(table(FamilyId::CCS22ntratU, p), {0.5, 0.5}, {0.5, 0.5}, 2, "CCS22ntratU");
    tables += 7;
  }
  for (auto [xi, zeta] : std::vector<std::pair<double, double>>{{0, 0}, {1, -0.5}, {2, 3}, {-0.7, 0.4}}) {
    FamilyParams p;
    p.xi = xi;
    p.zeta = zeta;
    const double ep = std::exp(xi), em = std::exp(-xi), zp = std::exp(zeta), zm = std::exp(-zeta);
    const double n2 = 1 / (ep + em + zp + zm);
    check(table(FamilyId::CCShyper, p), {n2 * (ep + zp), n2 * (em + zm), n2 * (ep + zp), n2 * (em + zm)},
          {n2 * (ep + zm), n2 * (em + zp), n2 * (em + zp), n2 * (ep + zm)}, 4, "CCShyper");
    ++tables;
  }
  if (v.pass) v.detail = "q_k, Delta and " + std::to_string(tables) + " conditional tables within 1e-12";
  return v;
}

// 8
Verdict io_and_exit_codes() {
  Verdict v;
  int mismatches = 0;
  const auto same = [](const Operator& x, const Operator& y) {
    return x.size() == y.size() && std::memcmp(x.data(), y.data(), sizeof(Complex) * std::size_t(x.size())) == 0;
  };
  const auto round = [](const io::Json& j) { return io::parse_document(io::dump(j)); };
  const auto ab = twoqubit::canonical_events();
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng = stream_engine(42, Stream::Roundtrip, i);
    const Index d = 2 + Index(i % 4);
    switch (i % 5) {
      case 0: {
        const auto s = ginibre_state(d, rng);
        mismatches += !same(io::state_from(round(io::document(s))).rho(), s.rho());
        break;
      }
      case 1: {
        const PureState s(haar_ket(d, rng));
        mismatches += !same(io::pure_state_from(round(io::document(s))).vector(), s.vector());
        break;
      }
      case 2: {
        const auto p = haar_atomic_partition(d, rng);
        const auto q = io::partition_from(round(io::document(p)));
        for (std::size_t k = 0; k < p.size(); ++k) mismatches += !same(q.atom(k), p.atom(k));
        break;
      }
      case 3: {
        const auto p = random_commuting_pair(d, rng);
        const auto q = io::event_pair_from(round(io::document(p)));
        mismatches += !same(q.A().op(), p.A().op()) || !same(q.B().op(), p.B().op());
        break;
      }
      case 4: {
        CCSReport r;
        r.is_ccs = i % 2;
        r.ltp_residuals = {std::uniform_real_distribution<double>(-1, 1)(rng), 1e-17, -0.0, 1.0 / 3};
        r.counterexamples.push_back({"replay", ginibre_state(4, rng).rho(), {}, ab.A().op(), ab.B().op()});
        r.seed = rng();
        const auto back = io::report_from(round(io::document(r)));
        mismatches += std::memcmp(back.ltp_residuals.data(), r.ltp_residuals.data(), sizeof r.ltp_residuals) != 0 ||
                      !same(back.counterexamples.at(0).state, r.counterexamples[0].state) || back.seed != r.seed;
        break;
      }
    }
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");

  const auto dir = std::filesystem::temp_directory_path() / "ccslab_acceptance";
  std::filesystem::create_directories(dir);
  const auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream((dir / name)) << text;
    return (dir / name).string();
  };
  const auto cltp = families::generate(FamilyId::CLTP, [] {
    FamilyParams p;
    p.a = Complex(0.6);
    p.b = Complex(0, 0.8);
    return p;
  }());
  const auto state = put("state.json", io::dump(io::document(*cltp.state)));
  const auto part = put("part.json", io::dump(io::document(cltp.partition)));
  const auto bad = put("bad.json", "{\n  \"kind\": ,\n}");
  const auto small = put("small.json", io::dump(io::document(DensityState::maximally_mixed(2))));

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"families"}, cli::kSuccess},
      {{"classify", state, part}, cli::kSuccess},
      {{"classify", bad, part}, cli::kInputError},
      {{"classify", small, part}, cli::kInputError},
      {{"generate", "CCSnope"}, cli::kInputError},
      {{"generate", "CCSclass", "--with-state"}, cli::kDomainError},
      {{"solve-ltp", "--theta", "0.7853981633974483"}, cli::kSuccess},
      {{"props", "--n", "200", "--invert-atomicity"}, cli::kCheckFailed},
      {{"props", "--n", "10"}, cli::kSuccess},
      {{"table"}, cli::kSuccess},
  };
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int code = cli::run(c.args, out, err);
    v.require(code == c.code, c.args[0] + " " + (c.args.size() > 1 ? c.args[1] : "") + ": exit " +
                                  std::to_string(code) + ", expected " + std::to_string(c.code));
  }
  if (v.pass) v.detail = "1000 documents bit-exact; " + std::to_string(cases.size()) + " exit-code fixtures (exact)";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"golden table", golden_table},
      {"LTP exact values at pi/4", ltp_exact_values},
      {"LTP sweep over [0, pi]", ltp_sweep},
      {"determinant oracles", determinant_oracles},
      {"proposition suite", proposition_suite},
      {"correlation bounds", correlation_bounds},
      {"reference scalars and tables", reference_scalars},
      {"JSON round trip and exit codes", io_and_exit_codes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << v.detail << '\n';
  }
  return failed == 0 ? 0 : 1;
}
