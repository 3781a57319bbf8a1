#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/qprob.hpp"
#include "ccs/twoqubit.hpp"

namespace ccs::families {

enum class FamilyId {
  TrivAB2,
  TrivAB4,
  CCSclass,
  CCSGabor,
  CCSclassU,
  CCStwist,
  CCSBell,
  CCShyper,
  CCSntrat,
  CCSntratU,
  CCS22ntrat,
  CCS22ntratU,
  CLTP,
  CCSclassUspec,
  CCStwistLTPspec,
  CCSntratC,
  CCS22ntratC
};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);
const std::vector<FamilyId>& all_families();

struct FamilyParams {
  std::optional<double> theta;
  std::optional<double> xi;
  std::optional<double> zeta;
  std::optional<Complex> c;
  std::optional<Complex> s;
  std::optional<Complex> a;  // state amplitudes
  std::optional<Complex> b;
  std::optional<twoqubit::PerfectCorrParams> r;

  static FamilyParams with_theta(double t) {
    FamilyParams p;
    p.theta = t;
    return p;
  }
};

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::string_view parameters;      // required generator parameters
  std::string_view state_parameters;
  std::string_view description;
};

const FamilyInfo& info(FamilyId id);

struct FamilyInstance {
  FamilyId id;
  Partition partition;
  bool atomic = true;
  std::optional<DensityState> state;
  // Defining unit vectors: the atoms, or the four rank-one pieces of a rank-two family.
  std::vector<Ket> vectors;
};

FamilyInstance generate(FamilyId id, const FamilyParams& params, const Tolerance& tol = {});
DensityState associated_state(FamilyId id, const FamilyParams& params, const Tolerance& tol = {});
bool is_state_specific(FamilyId id);

// Named states.
Ket bell0();  // (|00⟩+|11⟩)/√2
Ket cltp_state(Complex a, Complex b);
Ket classU_ltp_state(double a, double b);  // (a, b, b, −a)/√2
Ket twist_ltp_state(double a, double b);   // (a, b, b, a)/√2
Ket classU_ltp_state_spec();
Ket twist_ltp_state_spec();

// Single-qubit rotation U_θ = c|0⟩⟨0| − s|0⟩⟨1| + s|1⟩⟨0| + c|1⟩⟨1|.
Operator rotation(double theta);
// U = (|0⟩⟨0| − |0⟩⟨1| + |1⟩⟨0| + |1⟩⟨1|)/√2, mapping |0⟩,|1⟩ to |+⟩,|−⟩.
Operator hadamard_like();

// ---------------------------------------------------------------------------
// Expected classification rows

enum class Expect { Yes, No, NotApplicable, Unresolved };

std::string_view to_string(Expect e);

enum class TrivialityLevel { Strong, Weak, Nontrivial, NotApplicable };

std::string_view to_string(TrivialityLevel t);

struct TableRow {
  Expect ccs = Expect::Yes;
  bool ccs_state_specific = false;  // CCS only for the associated state
  bool atomic = true;
  CommutationClass commuting = CommutationClass::Commuting;
  Expect product = Expect::Yes;
  TrivialityLevel triviality = TrivialityLevel::Strong;
  Expect ltp = Expect::Yes;
  Expect deterministic = Expect::Yes;
};

TableRow expected_table_row(FamilyId id, const FamilyParams& params);

bool theta_in_pi_z(double theta, double eps = 1e-12);

// Equality of vector lists up to per-vector phase and ordering: |⟨a|b⟩| = 1 matching.
bool same_up_to_phase_and_order(const std::vector<Ket>& x, const std::vector<Ket>& y, double eps);

}  // namespace ccs::families
