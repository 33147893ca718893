#pragma once

#include "rlk/representation.hpp"

namespace rlk {

/// Co-Leibniz identity (id x d)d = (d x id)d + (tau x id)(id x d)d on every
/// basis element, for a raw coproduct tensor d[i][j][k] meaning
/// delta(e_i) = sum d[i][j][k] e_j x e_k.
CheckResult check_coleibniz(const Tensor3& raw);

/// Validated Leibniz coproduct.
class Coproduct {
 public:
  static Coproduct create(const FieldSpec& field, Tensor3 d);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& tensor() const { return d_; }

 private:
  Coproduct(FieldSpec field, std::size_t dim, Tensor3 d);

  FieldSpec field_;
  std::size_t dim_;
  Tensor3 d_;
};

/// The two algebra/coalgebra compatibility conditions on basis pairs:
///   (R_x x id) d(y) = tau((R_y x id) d(x))
///   d([x,y]) = ((id x R_y - L_y x id - R_y x id)(id + tau)) d(x)
///              + (id x L_x + L_x x id) d(y)
CheckResult check_leibniz_bialgebra(const LeibnizAlgebra& alg, const Tensor3& d);

/// Reynolds identity on the coalgebra side, per basis element:
///   (S x S)d + w (S x S)dS = (S x id)dS + (id x S)dS.
CheckResult check_reynolds_coalgebra(const Tensor3& d, const Value& weight, const Matrix& co_op);

/// The two mixed tensor conditions coupling R, S and d, per basis element:
///   (id x R)dR + (S x R)d = (S x id)dR + w (S x R)dR
///   (R x id)dR + (R x S)d = (id x S)dR + w (R x S)dR
CheckResult check_bundle_tensor_first(const Tensor3& d, const Value& weight, const Matrix& op,
                                      const Matrix& co_op);
CheckResult check_bundle_tensor_second(const Tensor3& d, const Value& weight, const Matrix& op,
                                       const Matrix& co_op);
CheckResult check_bundle_tensor_conditions(const Tensor3& d, const Value& weight,
                                           const Matrix& op, const Matrix& co_op);

/// One verdict per bundle axiom; diagnostic rather than short-circuiting.
struct BundleReport {
  CheckResult bialgebra;       // (1) co-Leibniz + compatibility
  CheckResult reynolds_alg;    // (2) R is Reynolds on the algebra
  CheckResult reynolds_coalg;  // (3) S is Reynolds on the coalgebra
  CheckResult adjoint_adm;     // (4) S adjoint admissible
  CheckResult tensor_cond;     // (5) mixed tensor conditions

  bool ok() const {
    return !bialgebra && !reynolds_alg && !reynolds_coalg && !adjoint_adm && !tensor_cond;
  }
};

BundleReport check_reynolds_bialgebra(const LeibnizAlgebra& alg, const Tensor3& d,
                                      const Value& weight, const Matrix& op, const Matrix& co_op);

/// A full bialgebra bundle (algebra, coproduct, weight, both operators) with
/// every axiom validated at construction.
class BialgebraBundle {
 public:
  static BialgebraBundle create(LeibnizAlgebra alg, Tensor3 d, Value weight, Matrix op,
                                Matrix co_op);

  const LeibnizAlgebra& alg() const { return alg_; }
  const Tensor3& coproduct() const { return d_; }
  const Value& weight() const { return weight_; }
  const Matrix& op() const { return op_; }
  const Matrix& co_op() const { return co_op_; }

 private:
  BialgebraBundle(LeibnizAlgebra alg, Tensor3 d, Value weight, Matrix op, Matrix co_op);

  LeibnizAlgebra alg_;
  Tensor3 d_;
  Value weight_;
  Matrix op_, co_op_;
};

/// Skew-symmetric bilinear form, nondegenerate. Validated at construction.
class BilinearForm {
 public:
  static BilinearForm create(const FieldSpec& field, Matrix b);
  /// Canonical block form [[0, -I], [I, 0]] on a 2n-dim double.
  static BilinearForm canonical_double(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& matrix() const { return b_; }

  Value eval(const Vector& x, const Vector& y) const;

 private:
  BilinearForm(FieldSpec field, std::size_t dim, Matrix b);

  FieldSpec field_;
  std::size_t dim_;
  Matrix b_;
};

/// Invariance B(x,[y,z]) = B([x,z],y) + B([z,x],y) on basis triples, plus the
/// derived identity B(x,[y,z]) = -B([y,x],z) as a second relation.
CheckResult check_quadratic_invariance(const Tensor3& bracket, const BilinearForm& form);
CheckResult check_quadratic_invariance(const LeibnizAlgebra& alg, const BilinearForm& form);

/// The unique operator with B(Mx, y) = B(x, adj(M) y), i.e. B^{-1} M^T B.
Matrix adjoint_operator(const BilinearForm& form, const Matrix& op);

/// Bracket of the dual algebra: cstar[j][k][i] = d[i][j][k].
Tensor3 dual_bracket_tensor(const Tensor3& d);

/// Action matrices for a matched-pair sum bracket.
struct MatchedPairActions {
  std::vector<Matrix> on2_left, on2_right;  // g1 acting on g2
  std::vector<Matrix> on1_left, on1_right;  // g2 acting on g1
};

/// Coadjoint actions of g and of the dual algebra of d on each other.
MatchedPairActions coadjoint_actions(const LeibnizAlgebra& alg, const Tensor3& d);

/// Sum bracket: [x+u, y+v] = [x,y] + rho2_r(v)x + rho2_l(u)y + [u,v]
///              + rho1_r(y)u + rho1_l(x)v.
Tensor3 matched_pair_bracket(const Tensor3& c1, const Tensor3& c2,
                             const MatchedPairActions& acts);

struct MatchedPairReport {
  CheckResult rep1;          // actions of g1 on g2 form a Reynolds representation
  CheckResult rep2;          // actions of g2 on g1 form a Reynolds representation
  CheckResult sum_leibniz;   // the sum bracket is Leibniz
  CheckResult sum_reynolds;  // the block operator is Reynolds on the sum

  bool ok() const { return !sum_leibniz && !sum_reynolds; }
};

MatchedPairReport check_matched_pair(const LeibnizAlgebra& alg1, const LeibnizAlgebra& alg2,
                                     const Value& weight, const Matrix& op1, const Matrix& op2,
                                     const MatchedPairActions& acts);
MatchedPairReport check_matched_pair(const ReynoldsContext& ctx1, const ReynoldsContext& ctx2,
                                     const MatchedPairActions& acts);

struct DoubleData {
  Tensor3 bracket;  // 2n x 2n x 2n sum bracket, basis (e_1..e_n, e^1..e^n)
  Matrix form;      // [[0, -I], [I, 0]]
};

/// Sum bracket of g with the dual algebra of d under coadjoint actions, with the
/// canonical pairing form. Throws DualNotLeibniz when d's dual bracket is not Leibniz.
DoubleData build_double(const LeibnizAlgebra& alg, const Tensor3& d);

struct ManinReport {
  CheckResult dual_leibniz;
  CheckResult double_leibniz;
  CheckResult subalgebras;
  CheckResult invariance;
  CheckResult block_reynolds;

  bool ok() const {
    return !dual_leibniz && !double_leibniz && !subalgebras && !invariance && !block_reynolds;
  }
};

/// Verifies the double as a quadratic Reynolds structure: both halves close,
/// the canonical form is invariant, and diag(R, S^T) is Reynolds on the double.
ManinReport check_manin_triple(const LeibnizAlgebra& alg, const Tensor3& d, const Value& weight,
                               const Matrix& op, const Matrix& co_op);

}  // namespace rlk
