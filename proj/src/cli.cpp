#include "ccs/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ccs/classify.hpp"
#include "ccs/families.hpp"
#include "ccs/golden.hpp"
#include "ccs/io.hpp"
#include "ccs/ltp_solver.hpp"
#include "ccs/twoqubit.hpp"

namespace ccs::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

io::Document read_document(const std::string& path) {
  try {
    return io::parse_document(read_file(path));
  } catch (const io::ParseError& e) {
    throw io::ParseError(e.line(), e.column(), e.message(), path);
  }
}

Tolerance default_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("CCSLAB_EPS")) {
    char* end = nullptr;
    const double eps = std::strtod(env, &end);
    if (end == env || *end != '\0') throw InvalidArgument("CCSLAB_EPS is not a number");
    tol = Tolerance(eps, tol.eps_prob);
  }
  return tol;
}

// "re" or "re,im"
Complex parse_complex(const std::string& text, const char* name) {
  std::istringstream s(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(s >> re)) throw InvalidArgument(std::string("--") + name + ": expected re[,im]");
  if (s >> comma) {
    if (comma != ',' || !(s >> im)) throw InvalidArgument(std::string("--") + name + ": expected re[,im]");
  }
  std::string rest;
  if (s >> rest) throw InvalidArgument(std::string("--") + name + ": trailing characters");
  return {re, im};
}

struct GenerateArgs {
  std::string family;
  std::optional<double> theta, xi, zeta, r1, r2, r3;
  std::optional<std::string> c, s, a, b;
  bool with_state = false;
};

families::FamilyParams to_params(const GenerateArgs& g) {
  families::FamilyParams p;
  p.theta = g.theta;
  p.xi = g.xi;
  p.zeta = g.zeta;
  if (g.c) p.c = parse_complex(*g.c, "c");
  if (g.s) p.s = parse_complex(*g.s, "s");
  if (g.a) p.a = parse_complex(*g.a, "a");
  if (g.b) p.b = parse_complex(*g.b, "b");
  if (g.r1 || g.r2 || g.r3) p.r = twoqubit::PerfectCorrParams{g.r1.value_or(0), g.r2.value_or(0), g.r3.value_or(0)};
  return p;
}

int cmd_generate(const GenerateArgs& g, const Tolerance& tol, std::ostream& out) {
  const auto id = families::parse_family(g.family);
  if (!id) throw InvalidArgument("unknown family '" + g.family + "'");
  const auto params = to_params(g);
  const auto inst = families::generate(*id, params, tol);
  const DensityState* state = nullptr;
  std::optional<DensityState> owned;
  if (g.with_state) {
    owned = families::associated_state(*id, params, tol);
    state = &*owned;
  }
  out << io::dump(io::document(inst.partition)) << '\n';
  if (state) out << io::dump(io::document(*state)) << '\n';
  return kSuccess;
}

int cmd_families(std::ostream& out) {
  for (auto id : families::all_families()) {
    const auto& i = families::info(id);
    out << std::left << std::setw(16) << i.name << " params: " << (i.parameters.empty() ? "-" : i.parameters)
        << "; state: " << (i.state_parameters.empty() ? "-" : i.state_parameters) << "; " << i.description << '\n';
  }
  return kSuccess;
}

int cmd_table(bool all_cells, const SamplerConfig& cfg, const Tolerance& tol, std::ostream& out) {
  const auto cells = golden::run_golden(golden::default_grid(), cfg, tol);
  for (const auto& c : cells) {
    if (!all_cells && c.status == golden::CellStatus::Pass) continue;
    out << golden::to_string(c.status) << "  " << c.family << " [" << c.params << "] " << c.column
        << ": expected " << c.expected << ", got " << c.actual;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  const auto s = golden::summarize(cells);
  out << "seed " << cfg.seed << ": " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped, "
      << s.not_applicable << " n/a\n";
  return s.ok() ? kSuccess : kCheckFailed;
}

int cmd_solve_ltp(std::optional<double> theta, std::optional<std::size_t> grid, std::ostream& out) {
  if (theta.has_value() == grid.has_value()) throw InvalidArgument("give exactly one of --theta and --grid");
  if (theta) {
    out << io::to_json(ltp::solve_state_params(*theta)).dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& row : ltp::plot_data(ltp::uniform_grid(0, M_PI, *grid)))
    out << io::dump(io::to_json(row)) << '\n';
  return kSuccess;
}

int cmd_plot(std::size_t grid, const std::string& path, std::ostream& out) {
  const auto rows = ltp::plot_data(ltp::uniform_grid(0, M_PI, grid));
  if (path.empty()) {
    ltp::write_plot_csv(out, rows);
    return kSuccess;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  ltp::write_plot_csv(f, rows);
  return kSuccess;
}

int cmd_props(const SamplerConfig& cfg, bool invert_atomicity, bool json, const Tolerance& tol, std::ostream& out) {
  PropositionOptions opts;
  opts.tol = tol;
  opts.invert_atomicity = invert_atomicity;
  const auto rep = verify_propositions(cfg, opts);
  if (json) {
    out << io::to_json(rep).dump(2) << '\n';
    return rep.all_passed() ? kSuccess : kCheckFailed;
  }
  out << "seed " << rep.seed << ", n " << rep.n << '\n';
  for (const auto& r : rep.results) {
    out << (r.violations == 0 ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name << " instances "
        << r.instances << ", hypotheses met " << r.hypotheses_met << ", violations " << r.violations << '\n';
    for (const auto& w : r.counterexamples) out << "  counterexample " << io::dump(io::to_json(w)) << '\n';
  }
  const auto& c = rep.contrast;
  out << (c.confirmed() ? "PASS " : "FAIL ") << "contrast CCS22ntratC: ccs " << c.ccs << ", noncommuting "
      << c.noncommuting << ", ltp " << c.ltp << ", deterministic " << c.deterministic << '\n';
  return rep.all_passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Common cause system laboratory", "ccslab"};
  app.require_subcommand(1);

  std::string state_file, partition_file, pair_file;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::optional<double> eps;
  auto* classify_cmd = app.add_subcommand("classify", "classify a (state, partition, event pair) triple");
  classify_cmd->add_option("state", state_file, "state or pure_state document")->required();
  classify_cmd->add_option("partition", partition_file, "partition document")->required();
  classify_cmd->add_option("pair", pair_file, "event_pair document (canonical events on dimension 4 if omitted)");
  classify_cmd->add_option("--seed", seed, "sampler seed");
  classify_cmd->add_option("--samples", samples, "sampled states")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--eps", eps, "equality tolerance");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "emit a family partition (and state) as JSON Lines");
  generate_cmd->add_option("family", gen.family, "family name")->required();
  generate_cmd->add_option("--theta", gen.theta, "angle in radians");
  generate_cmd->add_option("--xi", gen.xi);
  generate_cmd->add_option("--zeta", gen.zeta);
  generate_cmd->add_option("--c", gen.c, "complex re[,im]");
  generate_cmd->add_option("--s", gen.s, "complex re[,im]");
  generate_cmd->add_option("--a", gen.a, "state amplitude re[,im]");
  generate_cmd->add_option("--b", gen.b, "state amplitude re[,im]");
  generate_cmd->add_option("--r1", gen.r1);
  generate_cmd->add_option("--r2", gen.r2);
  generate_cmd->add_option("--r3", gen.r3);
  generate_cmd->add_flag("--with-state", gen.with_state, "also emit the associated state");

  auto* families_cmd = app.add_subcommand("families", "list the family catalog");

  bool all_cells = false;
  auto* table_cmd = app.add_subcommand("table", "golden classification table");
  table_cmd->add_flag("--params-grid", all_cells, "print every cell of the parameter grid");
  table_cmd->add_option("--seed", seed, "sampler seed");

  std::optional<double> theta;
  std::optional<std::size_t> grid;
  auto* solve_cmd = app.add_subcommand("solve-ltp", "LTP state parameters for the rotated product basis");
  solve_cmd->add_option("--theta", theta, "angle in radians");
  solve_cmd->add_option("--grid", grid, "number of points on [0, π]")->check(CLI::Range(std::size_t(2), SIZE_MAX));

  std::size_t plot_grid = 1001;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "CSV plot data theta,xi,a,b over [0, π]");
  plot_cmd->add_option("--grid", plot_grid, "number of points")->check(CLI::Range(std::size_t(2), SIZE_MAX));
  plot_cmd->add_option("--out", plot_out, "output file (standard output if omitted)");

  std::size_t props_n = 1000;
  bool invert_atomicity = false, props_json = false;
  auto* props_cmd = app.add_subcommand("props", "randomized verification of the structural propositions");
  props_cmd->add_option("--seed", seed, "sampler seed");
  props_cmd->add_option("--n", props_n, "instances per proposition")->check(CLI::PositiveNumber);
  props_cmd->add_flag("--json", props_json, "full JSON report");
  props_cmd->add_flag("--invert-atomicity", invert_atomicity, "test fixture: invert the atomicity hypothesis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    Tolerance tol = default_tolerance();
    if (eps) tol = Tolerance(*eps, tol.eps_prob);
    SamplerConfig cfg;
    cfg.seed = seed;

    if (*classify_cmd) {
      cfg.n_states = samples;
      const DensityState state = io::state_from(read_document(state_file), tol);
      const Partition part = io::partition_from(read_document(partition_file), tol);
      std::vector<std::string> notes;
      std::optional<EventPair> pair;
      if (!pair_file.empty()) {
        pair = io::event_pair_from(read_document(pair_file), tol);
      } else if (part.dim() == 4) {
        pair = twoqubit::canonical_events();
        notes.push_back("event pair omitted: canonical events A = |0⟩⟨0|⊗I, B = I⊗|0⟩⟨0| assumed");
      } else {
        throw InvalidArgument("an event pair is required unless the dimension is 4");
      }
      ClassifyOptions opts;
      opts.tol = tol;
      CCSReport rep = classify(part, *pair, state, cfg, opts);
      rep.notes.insert(rep.notes.begin(), notes.begin(), notes.end());
      out << io::document(rep).dump(2) << '\n';
      return kSuccess;
    }
    if (*generate_cmd) return cmd_generate(gen, tol, out);
    if (*families_cmd) return cmd_families(out);
    if (*table_cmd) return cmd_table(all_cells, cfg, tol, out);
    if (*solve_cmd) return cmd_solve_ltp(theta, grid, out);
    if (*plot_cmd) return cmd_plot(plot_grid, plot_out, out);
    if (*props_cmd) {
      cfg.n_states = props_n;
      return cmd_props(cfg, invert_atomicity, props_json, tol, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ccs::cli
