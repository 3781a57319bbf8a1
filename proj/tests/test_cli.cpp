#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccs/cli.hpp"
#include "ccs/families.hpp"
#include "ccs/io.hpp"
#include "ccs/ltp_solver.hpp"
#include "ccs/twoqubit.hpp"

using namespace ccs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "ccslab_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == cli::kSuccess);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"classify"}).code == cli::kInputError);
  CHECK(run({"solve-ltp"}).code == cli::kInputError);
}

TEST_CASE("families and generate") {
  const auto fam = run({"families"});
  CHECK(fam.code == cli::kSuccess);
  CHECK(fam.out.find("CCShyper") != std::string::npos);

  CHECK(run({"generate", "CCSnope"}).code == cli::kInputError);
  CHECK(run({"generate", "CCSBell"}).code == cli::kInputError);
  CHECK(run({"generate", "CCSclass", "--with-state"}).code == cli::kDomainError);
  CHECK(run({"generate", "CCSntratC", "--c", "1,x", "--s", "0"}).code == cli::kInputError);

  const auto bell = run({"generate", "CCSBell", "--theta", "1.0471975511965976"});
  REQUIRE(bell.code == cli::kSuccess);
  const auto doc = io::parse_document(lines(bell.out).at(0));
  const auto part = io::partition_from(doc);
  REQUIRE(part.has_stored_atoms());
  const double c = std::cos(M_PI / 6) * M_SQRT1_2, s = std::sin(M_PI / 6) * M_SQRT1_2;
  std::vector<Ket> expected(4, Ket(4));
  expected[0] << c, c, -s, s;
  expected[1] << -c, c, s, s;
  expected[2] << -s, s, -c, -c;
  expected[3] << s, s, c, -c;
  CHECK(families::same_up_to_phase_and_order(part.stored_atoms(), expected, 1e-12));

  const auto special = run({"generate", "CCSclassUspec", "--with-state"});
  REQUIRE(special.code == cli::kSuccess);
  const auto ls = lines(special.out);
  REQUIRE(ls.size() == 2);
  const auto st = io::state_from(io::parse_document(ls[1]));
  const Ket v = families::classU_ltp_state_spec();
  CHECK((st.rho() - v * v.adjoint()).norm() < 1e-15);
}

TEST_CASE("classify files") {
  families::FamilyParams p;
  p.a = Complex(0.6);
  p.b = Complex(0, 0.8);
  const auto f = families::generate(families::FamilyId::CLTP, p);
  const auto state = write("state.json", io::dump(io::document(*f.state)));
  const auto part = write("part.json", io::dump(io::document(f.partition)));
  const auto pair = write("pair.json", io::dump(io::document(twoqubit::canonical_events())));

  const auto r = run({"classify", state, part, pair, "--samples", "50"});
  REQUIRE(r.code == cli::kSuccess);
  const auto rep = io::report_from(io::parse_document(r.out));
  CHECK_FALSE(rep.is_ccs);
  CHECK(rep.ltp);

  const auto implicit = run({"classify", state, part, "--samples", "50"});
  REQUIRE(implicit.code == cli::kSuccess);
  const auto rep2 = io::report_from(io::parse_document(implicit.out));
  bool noted = false;
  for (const auto& n : rep2.notes) noted = noted || n.find("canonical") != std::string::npos;
  CHECK(noted);
  CHECK(rep2.ltp == rep.ltp);

  const auto malformed = write("bad.json", "{\n  \"version\": 1,,\n}");
  const auto bad = run({"classify", malformed, part});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.err.find("line 2") != std::string::npos);

  const auto small = write("small.json", io::dump(io::document(DensityState::maximally_mixed(2))));
  CHECK(run({"classify", small, part}).code == cli::kInputError);
  CHECK(run({"classify", (scratch() / "missing.json").string(), part}).code == cli::kInputError);
  CHECK(run({"classify", state, part, "--eps", "2"}).code == cli::kInputError);
}

TEST_CASE("solver commands") {
  const auto r = run({"solve-ltp", "--theta", "0.7853981633974483"});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = io::parse_json(r.out);
  const double r5 = std::sqrt(5.0);
  CHECK(std::abs(j.at("a").get<double>() - std::sqrt((r5 + 1) / (2 * r5))) < 1e-12);
  CHECK(std::abs(j.at("b").get<double>() - std::sqrt((r5 - 1) / (2 * r5))) < 1e-12);

  const auto p2 = run({"plot", "--grid", "2"});
  REQUIRE(p2.code == cli::kSuccess);
  std::istringstream in(p2.out);
  const auto rows = ltp::read_plot_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].xi == 0.0);
  CHECK(rows[0].a == 1.0);
  CHECK(rows[1].xi == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(rows[1].b == 1.0);
  CHECK(run({"plot", "--grid", "1"}).code == cli::kInputError);

  const auto file = (scratch() / "plot.csv").string();
  REQUIRE(run({"plot", "--grid", "1001", "--out", file}).code == cli::kSuccess);
  std::ifstream csv(file);
  const auto sweep = ltp::read_plot_csv(csv);
  REQUIRE(sweep.size() == 1001);
  double worst = 0;
  for (const auto& row : sweep) worst = std::max(worst, std::abs(ltp::quadratic_residual(row.a, row.b, row.theta)));
  CHECK(worst <= 1e-9);
}

TEST_CASE("props and table") {
  const auto ok = run({"props", "--n", "10"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("seed") != std::string::npos);
  const auto fault = run({"props", "--n", "200", "--invert-atomicity"});
  CHECK(fault.code == cli::kCheckFailed);
  CHECK(fault.out.find("FAIL aCCSLTPPCComm") != std::string::npos);

  const auto table = run({"table"});
  CHECK(table.code == cli::kSuccess);
  CHECK(table.out.find("SKIPPED") != std::string::npos);
}

TEST_CASE("tolerance override from the environment") {
  ::setenv("CCSLAB_EPS", "abc", 1);
  CHECK(run({"solve-ltp", "--theta", "1"}).code == cli::kInputError);
  ::setenv("CCSLAB_EPS", "1e-8", 1);
  CHECK(run({"solve-ltp", "--theta", "1"}).code == cli::kSuccess);
  ::unsetenv("CCSLAB_EPS");
}

}  // TEST_SUITE
