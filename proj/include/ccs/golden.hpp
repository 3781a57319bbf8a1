#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/classify.hpp"
#include "ccs/families.hpp"

namespace ccs::golden {

enum class CellStatus { Pass, Fail, Skipped, NotApplicable };

std::string_view to_string(CellStatus s);

struct GoldenCase {
  families::FamilyId id;
  families::FamilyParams params;
  std::string label;
};

struct Cell {
  std::string family;
  std::string params;
  std::string column;  // ccs, atomic, commuting, product, triviality, ltp, deterministic
  std::string expected;
  std::string actual;
  CellStatus status = CellStatus::Pass;
  std::string detail;
};

using Generator = std::function<families::FamilyInstance(families::FamilyId, const families::FamilyParams&,
                                                         const Tolerance&)>;

// Every family over θ ∈ {0, π/6, π/4, π/3, π/2, 2π/3, π}, three (ξ, ζ) points for the hyperbolic
// family, and (c, s) × r samples for the complex-parameter families.
std::vector<GoldenCase> default_grid();

std::vector<Cell> run_golden(const std::vector<GoldenCase>& cases, const SamplerConfig& cfg = {},
                             const Tolerance& tol = {}, const Generator& generator = families::generate);

struct GoldenSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t not_applicable = 0;

  bool ok() const { return fail == 0; }
};

GoldenSummary summarize(const std::vector<Cell>& cells);

}  // namespace ccs::golden
