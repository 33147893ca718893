#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "rlk/yangbaxter.hpp"

namespace rlk {

enum class AlgebraId { A1, A2 };

std::string algebra_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_name(const std::string& name);

/// The two 2-dimensional fixtures: A1 has [e2,e2] = e1; A2 has [e2,e1] = [e2,e2] = e1.
LeibnizAlgebra builtin_algebra(AlgebraId id, const FieldSpec& spec);

/// Built-in symmetric 2-tensor families solving the Yang-Baxter equation.
enum class RCase { A1Sym, A2CaseI, A2CaseII };

std::string rcase_name(RCase rc);
std::optional<RCase> rcase_from_name(const std::string& name);
AlgebraId rcase_algebra(RCase rc);
Matrix rcase_matrix(RCase rc, const Value& eta, const Value& gamma);
/// Whether the induced coproduct is nonzero for these parameters.
bool rcase_coproduct_nonzero(RCase rc, const Value& eta, const Value& gamma);

using SlotValues = std::map<std::string, Value>;

struct FamilyParams {
  Value lambda;
  Value eta;    // pair families only
  Value gamma;  // pair families only
};

struct FamilyInstance {
  Matrix op;
  std::optional<Matrix> co_op;  // engaged for pair families
};

enum class LambdaPolicy { Any, Zero, NonZero };

/// Parameter regime of the 2-tensor a pair family is tied to.
enum class RParamRegime {
  None,                 // operator family, no 2-tensor
  GammaNonzero,         // gamma != 0
  GammaZeroEtaNonzero,  // gamma = 0, eta != 0
  EtaMinus2Gamma,       // eta = -2 gamma, gamma != 0
  DeltaNonzero,         // any parameters with a nonzero induced coproduct
  EtaNonzero,           // eta != 0 (single-parameter case)
};

/// Parametric family of operators (or operator pairs) over a builtin algebra.
/// `instantiate` enforces every constraint: denominator nonvanishing, the lambda
/// policy, and parameter-regime ties; it returns nullopt when violated.
struct FamilyDescriptor {
  std::string name;
  AlgebraId alg = AlgebraId::A1;
  std::optional<RCase> rcase;  // engaged exactly for pair families
  bool derived = false;        // completion found by enumeration, not in the source table
  LambdaPolicy lambda = LambdaPolicy::Any;
  RParamRegime regime = RParamRegime::None;
  std::vector<std::string> slots;
  std::string constraints;

  std::function<std::optional<FamilyInstance>(const FamilyParams&, const SlotValues&)>
      instantiate;
  /// Solves slot values from a candidate, then reinstantiates and compares.
  std::function<std::optional<SlotValues>(const FamilyParams&, const Matrix& op,
                                          const Matrix* co_op)>
      match;
  /// Rewrites freshly drawn slots onto the family's constraint locus, when the
  /// locus has measure zero under uniform draws.
  std::function<void(Sampler&, const FieldSpec&, SlotValues&)> adjust_slots;

  bool is_pair() const { return rcase.has_value(); }
};

const std::vector<FamilyDescriptor>& family_registry();
const FamilyDescriptor* find_family(const std::string& name);
std::vector<const FamilyDescriptor*> families_for(AlgebraId id, std::optional<RCase> rcase);

struct FoundSolution {
  Matrix op;
  std::optional<Matrix> co_op;
  std::vector<std::string> matched;
  bool strict_triangular = false;  // pair also satisfies the two intertwining equations
};

struct EnumerationReport {
  AlgebraId alg = AlgebraId::A1;
  std::uint32_t p = 3;
  Value lambda;
  std::optional<RCase> rcase;
  std::optional<Value> eta, gamma;
  std::uint64_t scanned = 0;
  std::vector<FoundSolution> solutions;  // canonical entry-lexicographic order
  std::vector<std::pair<std::string, std::size_t>> family_counts;
  std::vector<std::size_t> unmatched;  // indices into `solutions`

  bool clean() const { return unmatched.empty(); }
};

/// Scans all p^4 operator candidates over F_p, keeps the Reynolds ones, and
/// matches each against the operator families.
EnumerationReport enumerate_reynolds(AlgebraId id, std::uint32_t p, const Value& lambda);

/// Scans (R, S) pairs over F_p: the p^4 Reynolds survivors each paired with all
/// p^4 candidates for S, kept when the full bundle with the induced coproduct
/// passes every axiom. Throws PreconditionFailed when the coproduct vanishes.
EnumerationReport enumerate_triangular_pairs(RCase rcase, const Value& eta, const Value& gamma,
                                             std::uint32_t p, const Value& lambda);

struct VerifyFamilyResult {
  bool ok = true;
  std::size_t trials = 0;
  std::string counterexample;  // empty when ok
};

/// Draws `trials` random rational parameter assignments honoring the family's
/// constraints and runs the relevant checker on each instance.
VerifyFamilyResult verify_family(const std::string& name, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace rlk
