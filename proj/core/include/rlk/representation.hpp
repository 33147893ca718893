#pragma once

#include "rlk/leibniz.hpp"

namespace rlk {

/// Bimodule actions (rho_left, rho_right) of a Leibniz algebra on an m-dim space,
/// one m x m matrix per basis element. Validated at construction.
class Representation {
 public:
  static Representation create(LeibnizAlgebra alg, std::size_t vdim,
                               std::vector<Matrix> act_left, std::vector<Matrix> act_right);

  const LeibnizAlgebra& alg() const { return alg_; }
  std::size_t vdim() const { return vdim_; }
  const std::vector<Matrix>& left() const { return act_left_; }
  const std::vector<Matrix>& right() const { return act_right_; }

  /// rho_left(z) for a vector z of the algebra.
  Matrix left_of(const Vector& z) const;
  Matrix right_of(const Vector& z) const;

 private:
  Representation(LeibnizAlgebra alg, std::size_t vdim, std::vector<Matrix> l,
                 std::vector<Matrix> r);

  LeibnizAlgebra alg_;
  std::size_t vdim_;
  std::vector<Matrix> act_left_, act_right_;
};

/// The three compatibility identities of a Leibniz bimodule, on basis pairs:
///   rho_l([x,y]) = [rho_l(x), rho_l(y)]
///   rho_r([x,y]) = rho_l(x) rho_r(y) - rho_r(y) rho_l(x)
///   -rho_r(y) rho_l(x) = rho_r(y) rho_r(x)
CheckResult check_representation(const LeibnizAlgebra& alg, std::size_t vdim,
                                 const std::vector<Matrix>& act_left,
                                 const std::vector<Matrix>& act_right);

/// Left/right multiplications acting on the algebra itself.
Representation adjoint_representation(const LeibnizAlgebra& alg);

/// Compatibility of a module operator `module_op` with the Reynolds structure:
///   rho(Rx) a(v) + w a(rho(Rx) a(v)) = a(rho(Rx) v) + a(rho(x) a(v))
/// for both actions, over all basis x.
CheckResult check_reynolds_representation(const Representation& rep, const ReynoldsContext& ctx,
                                          const Matrix& module_op);

/// A representation of a Reynolds Leibniz algebra. Validated at construction.
class ReynoldsRepresentation {
 public:
  static ReynoldsRepresentation create(Representation rep, ReynoldsContext ctx, Matrix module_op);

  const Representation& rep() const { return rep_; }
  const ReynoldsContext& ctx() const { return ctx_; }
  const Matrix& module_op() const { return module_op_; }

 private:
  ReynoldsRepresentation(Representation rep, ReynoldsContext ctx, Matrix module_op);

  Representation rep_;
  ReynoldsContext ctx_;
  Matrix module_op_;
};

/// Dual module (V*, -rho_l^T, rho_l^T + rho_r^T), realized by explicit transposes.
Representation dual_representation(const Representation& rep);

/// Admissibility of `dual_module_op` (beta): equivalent to its transpose making the
/// dual module a Reynolds representation. Checked directly:
///   b(rho(x) b(v)) + rho(Rx) b(v) = b(rho(Rx) v) + w b(rho(Rx) b(v))
/// for both actions.
CheckResult check_beta_admissible(const Representation& rep, const ReynoldsContext& ctx,
                                  const Matrix& dual_module_op);

/// Adjoint admissibility of `co_op` (S) on basis pairs:
///   S([x,Sy]) + [Rx,Sy] = S([Rx,y]) + w S([Rx,Sy])
///   S([Sx,y]) + [Sx,Ry] = S([x,Ry]) + w S([Sx,Ry])
CheckResult check_adjoint_admissible(const ReynoldsContext& ctx, const Matrix& co_op);

/// Raw overloads, for probing candidates that need not satisfy any invariant.
CheckResult check_adjoint_admissible(const LeibnizAlgebra& alg, const Value& weight,
                                     const Matrix& op, const Matrix& co_op);
CheckResult check_reynolds_module(const LeibnizAlgebra& alg, const Value& weight,
                                  const Matrix& op, std::size_t vdim,
                                  const std::vector<Matrix>& act_left,
                                  const std::vector<Matrix>& act_right, const Matrix& module_op);

struct SemidirectProduct {
  LeibnizAlgebra alg;  // dim n + m
  Matrix op;           // block-diag(R, module_op)
};

/// Semidirect sum bracket [x+u, y+v] = [x,y] + rho_l(x)v + rho_r(y)u with the
/// block-diagonal operator. The pair validates as a ReynoldsContext exactly when
/// (rep, module_op) is a Reynolds representation.
SemidirectProduct semidirect_product(const Representation& rep, const ReynoldsContext& ctx,
                                     const Matrix& module_op);

}  // namespace rlk
