#pragma once

#include "rlk/bialgebra.hpp"

namespace rlk {

/// Tensor-leg placement of a 2-tensor inside g x g x g.
enum class Slot { S12, S13, S23 };

/// Bracket product of two placed 2-tensors: the shared leg receives
/// [first factor's component, second factor's component]; the other legs keep
/// each factor's remaining component in place.
Tensor3 yb_product(const LeibnizAlgebra& alg, Slot first, Slot second, const Matrix& rfirst,
                   const Matrix& rsecond);

/// r12 r23 + r13 r23 - r12^t r13 - r13^t r12; zero exactly when r solves the
/// classical Leibniz Yang-Baxter equation. A ^t decoration substitutes the
/// transpose into that factor's legs.
Tensor3 clybe_defect(const LeibnizAlgebra& alg, const Matrix& rmat);

/// delta_r(x) = -r1 x [r2,x] + [r2,x] x r1 + [x,r2] x r1, as a raw coproduct tensor.
Tensor3 coboundary_coproduct(const LeibnizAlgebra& alg, const Matrix& rmat);

struct CoboundaryConditions {
  bool skew_right;   // (R_x x R_y)(r^t - r) = 0
  bool skew_mixed;   // (L_x x R_y + R_y x L_x + L_y x L_x)(r^t - r) = 0
  bool assoc;        // the third, cubic-in-r condition
  bool all() const { return skew_right && skew_mixed && assoc; }
};

/// The three conditions equivalent to delta_r making the algebra a Leibniz bialgebra.
CoboundaryConditions check_coboundary_conditions(const LeibnizAlgebra& alg, const Matrix& rmat);

struct AdmissibleClybe {
  bool clybe;  // defect tensor vanishes
  bool eq_sr;  // (S x id - id x R)(r) = 0, i.e. S r = r R^T
  bool eq_rs;  // (id x S - R x id)(r) = 0, i.e. r S^T = R r
  bool all() const { return clybe && eq_sr && eq_rs; }
};

AdmissibleClybe check_admissible_clybe(const ReynoldsContext& ctx, const Matrix& co_op,
                                       const Matrix& rmat);
AdmissibleClybe check_admissible_clybe(const LeibnizAlgebra& alg, const Value& weight,
                                       const Matrix& op, const Matrix& co_op, const Matrix& rmat);

struct TensorAdmissibility {
  bool coalgebra_side;   // operator form of the coalgebra Reynolds identity on delta_r
  bool mixed_first;      // operator form of the first mixed condition
  bool mixed_second;     // operator form of the second mixed condition
  bool all() const { return coalgebra_side && mixed_first && mixed_second; }
};

/// Operator-composition forms of the three bundle conditions on delta_r, expressed
/// through (S x id - id x R)(r) and its transpose mates. Requires S adjoint
/// admissible; throws PreconditionFailed otherwise.
TensorAdmissibility check_tensor_admissibility(const ReynoldsContext& ctx, const Matrix& co_op,
                                               const Matrix& rmat);

/// r read as a map from the dual space: column form of xi -> <xi, r1> r2.
Matrix r_sharp(const Matrix& rmat);

enum class OOperatorLevel { None, Weak, Full };

/// Relative Rota-Baxter property of o_map: V -> g on basis pairs,
///   [T u, T v] = T(rho_l(T u) v + rho_r(T v) u),  R T = T module_op;
/// Full additionally requires (rep, module_op) to be a Reynolds representation.
OOperatorLevel check_o_operator(const Matrix& o_map, const Representation& rep,
                                const ReynoldsContext& ctx, const Matrix& module_op);

struct OOperatorLift {
  ReynoldsContext double_ctx;  // g semidirect V* with block operator diag(R, beta^T)
  Matrix r_lift;               // symmetric embedding of o_map and its transpose
  Matrix co_op_lift;           // diag(co_op, module_op^T)
};

/// Lifts o_map to a symmetric 2-tensor on g + V*. The lift solves the
/// co_op_lift-admissible equation exactly when o_map is a weak relative
/// Rota-Baxter map with T beta = S T. Requires beta admissible.
OOperatorLift lift_o_operator(const Matrix& o_map, const Representation& rep,
                              const ReynoldsContext& ctx, const Matrix& module_op,
                              const Matrix& dual_module_op, const Matrix& co_op);

struct CrossAdmissibility {
  bool left;
  bool right;
  bool all() const { return left && right; }
};

/// beta(rho(Sx) v) + rho(Sx) a(v) = beta(rho(x) a(v)) + w beta(rho(Sx) a(v)),
/// both actions, all basis x.
CrossAdmissibility check_cross_admissibility(const ReynoldsContext& ctx, const Matrix& co_op,
                                             const Representation& rep, const Matrix& module_op,
                                             const Matrix& dual_module_op);

/// The closed family of operator substitutions x, -x, -x+theta, theta/x.
struct PiForm {
  enum class Kind { PlusX, MinusX, MinusXPlusTheta, ThetaXInverse };

  Kind kind = Kind::PlusX;
  Value theta;  // nonzero, last two kinds only

  static PiForm plus_x() { return {Kind::PlusX, Value()}; }
  static PiForm minus_x() { return {Kind::MinusX, Value()}; }
  static PiForm minus_x_plus(const Value& theta);
  static PiForm theta_over_x(const Value& theta);

  /// Applies the substitution to a square matrix; ThetaXInverse throws
  /// NotInvertible on singular input.
  Matrix apply(const Matrix& m) const;

  std::string str() const;
};

/// The compatibility system obtained by substituting beta = pi(module_op) and
/// S = pi(R): the Reynolds-representation conditions plus the variant's extra
/// equations. Holds exactly when the dual semidirect sum with block operator
/// diag(R, pi(module_op)^T) is diag(pi(R), module_op^T)-adjoint admissible.
CheckResult check_pi_admissible(const ReynoldsContext& ctx, const Representation& rep,
                                const Matrix& module_op, const PiForm& pi);

}  // namespace rlk
