#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlk/classify.hpp"

namespace rlk {

/// One verified statement, keyed by its anchor in the source material.
struct AnchorResult {
  std::string anchor;
  bool pass = false;
  std::string detail;
};

enum class SuiteSection { All, Sec2, Sec3, Sec4, Sec5 };

std::optional<SuiteSection> suite_from_name(const std::string& name);

/// Runs the fixture and property suite for one section. Deterministic per seed.
std::vector<AnchorResult> run_suite(SuiteSection section, std::uint64_t seed);

/// Outcome of one randomized property sweep.
struct SweepResult {
  std::size_t fixtures = 0;
  std::size_t positives = 0;  // fixtures on which the property's premise held
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const { return fixtures > 0 && violations == 0; }
  std::string summary() const;
};

// Randomized property sweeps over F_5; `weight_zero` pins the Reynolds weight to 0.
SweepResult sweep_induced_bracket(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_dual_representation(std::uint64_t seed, std::size_t count);
SweepResult sweep_beta_duality(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_semidirect(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_equivalence_routes(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_double_adjoint(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_quadratic_derived(std::uint64_t seed, std::size_t count);
SweepResult sweep_dual_quadratic_rep(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_intertwine_mirrors(std::uint64_t seed, std::size_t count);
SweepResult sweep_negated_operator_bundles(std::uint64_t seed, std::size_t count,
                                           bool weight_zero);
SweepResult sweep_triangular_construction(std::uint64_t seed, std::size_t count,
                                          bool weight_zero);
SweepResult sweep_tensor_admissibility(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_sharp_characterization(std::uint64_t seed, std::size_t count,
                                         bool weight_zero);
SweepResult sweep_lift_equivalence(std::uint64_t seed, std::size_t count, bool weight_zero);
SweepResult sweep_pi_substitution(std::uint64_t seed, std::size_t count, bool weight_zero);
/// Constructed full relative Rota-Baxter fixtures for every substitution variant.
SweepResult sweep_pi_bundles(std::uint64_t seed, bool weight_zero);

/// Entry-exact check of the three built-in coproduct tables at random rational
/// parameters.
SweepResult check_coproduct_goldens(std::uint64_t seed, std::size_t assignments);

}  // namespace rlk
