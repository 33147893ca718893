#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlk/linalg.hpp"

namespace rlk {

/// Locates a violated identity: the 1-based index tuple where it first fails,
/// the identity's label, and the two sides that disagree.
struct Witness {
  std::string relation;
  std::vector<std::size_t> where;
  Vector lhs;
  Vector rhs;

  std::string str() const;
};

using CheckResult = std::optional<Witness>;  // nullopt == identity holds

/// Finite-dimensional Leibniz algebra as a structure-constant tensor:
/// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k. Validated at construction.
class LeibnizAlgebra {
 public:
  static constexpr std::size_t kMaxDim = 8;

  /// Throws InvalidStructure when the left Leibniz identity fails or dim > 8.
  static LeibnizAlgebra create(const FieldSpec& field, Tensor3 c);
  static LeibnizAlgebra abelian(const FieldSpec& field, std::size_t dim);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor3& constants() const { return c_; }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// Left multiplication L_p: e_j -> [e_p, e_j], as a matrix.
  Matrix left_mult(std::size_t p) const;
  /// Right multiplication R_p: e_j -> [e_j, e_p], as a matrix.
  Matrix right_mult(std::size_t p) const;
  /// L_z for a vector z (linear combination of basis left-multiplications).
  Matrix left_mult(const Vector& z) const;
  Matrix right_mult(const Vector& z) const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  LeibnizAlgebra(FieldSpec field, std::size_t dim, Tensor3 c);

  FieldSpec field_;
  std::size_t dim_;
  Tensor3 c_;
};

/// Left Leibniz identity [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]]
/// over all basis triples of a raw structure-constant tensor.
CheckResult check_leibniz(const Tensor3& raw);

/// Weighted Reynolds identity on basis pairs:
/// [Rx,Ry] + w R([Rx,Ry]) = R([x,Ry]) + R([Rx,y]).
CheckResult check_reynolds(const LeibnizAlgebra& alg, const Value& weight, const Matrix& op);

/// A Leibniz algebra carrying a weighted Reynolds operator. Validated at construction.
class ReynoldsContext {
 public:
  static ReynoldsContext create(LeibnizAlgebra alg, Value weight, Matrix op);

  const LeibnizAlgebra& alg() const { return alg_; }
  const Value& weight() const { return weight_; }
  const Matrix& op() const { return op_; }

 private:
  ReynoldsContext(LeibnizAlgebra alg, Value weight, Matrix op);

  LeibnizAlgebra alg_;
  Value weight_;
  Matrix op_;
};

/// The bracket [x,y]_R = [x,Ry] + [Rx,y] - w[Rx,Ry] as a validated algebra.
LeibnizAlgebra induced_bracket(const ReynoldsContext& ctx);

/// Checks that `map` intertwines brackets and Reynolds operators:
/// map([x,y]) = [map x, map y] and map o R = R' o map.
CheckResult check_homomorphism(const Matrix& map, const ReynoldsContext& src,
                               const ReynoldsContext& dst);

}  // namespace rlk
