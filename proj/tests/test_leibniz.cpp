#include <doctest.h>

#include "rlk/classify.hpp"
#include "rlk/leibniz.hpp"

using namespace rlk;

namespace {

Matrix mat2(const FieldSpec& spec, long long a, long long b, long long c, long long d) {
  Matrix m(spec, 2, 2);
  m.at(0, 0) = Value::of(spec, a);
  m.at(0, 1) = Value::of(spec, b);
  m.at(1, 0) = Value::of(spec, c);
  m.at(1, 1) = Value::of(spec, d);
  return m;
}

Vector vec2(const FieldSpec& spec, long long a, long long b) {
  Vector v(spec, 2);
  v[0] = Value::of(spec, a);
  v[1] = Value::of(spec, b);
  return v;
}

}  // namespace

TEST_CASE("builtin algebras satisfy the Leibniz identity") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK_NOTHROW(builtin_algebra(AlgebraId::A1, q));
  CHECK_NOTHROW(builtin_algebra(AlgebraId::A2, FieldSpec::prime(5)));
  CHECK_NOTHROW(LeibnizAlgebra::abelian(q, 3));
}

TEST_CASE("check_leibniz finds the first violation") {
  const FieldSpec q = FieldSpec::rationals();
  // [e2,e2] = e2 violates the identity at the all-(2,2,2) triple.
  Tensor3 c(q, 2, 2, 2);
  c.at(1, 1, 1) = Value::one(q);
  const auto w = check_leibniz(c);
  REQUIRE(w.has_value());
  CHECK(w->where == std::vector<std::size_t>{2, 2, 2});

  // [e1,e2] = e2 is a Leibniz bracket: [x,y] = x1 y2 e2 satisfies the identity.
  Tensor3 ok(q, 2, 2, 2);
  ok.at(0, 1, 1) = Value::one(q);
  CHECK(!check_leibniz(ok));

  CHECK(!check_leibniz(Tensor3(q, 2, 2, 2)));
}

TEST_CASE("bracket is the bilinear contraction") {
  const FieldSpec q = FieldSpec::rationals();
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, q);
  CHECK(a1.bracket(vec2(q, 0, 1), vec2(q, 0, 1)) == vec2(q, 1, 0));
  CHECK(a1.bracket(vec2(q, 3, 5), Vector(q, 2)).is_zero());

  const LeibnizAlgebra a2 = builtin_algebra(AlgebraId::A2, q);
  CHECK(a2.bracket(vec2(q, 0, 1), vec2(q, 1, 1)) == vec2(q, 2, 0));
}

TEST_CASE("Reynolds identity checks") {
  const FieldSpec q = FieldSpec::rationals();
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, q);

  // R e1 = 2 e1, R e2 = 3 e1 is Reynolds for every weight.
  for (long long w : {0, 1, 2}) {
    CHECK(!check_reynolds(a1, Value::of(q, w), mat2(q, 2, 3, 0, 0)));
  }
  // The identity operator has weight 1 on any algebra.
  CHECK(!check_reynolds(a1, Value::one(q), Matrix::identity(q, 2)));
  CHECK(!check_reynolds(builtin_algebra(AlgebraId::A2, q), Value::one(q),
                        Matrix::identity(q, 2)));
  // The zero operator works for every weight.
  CHECK(!check_reynolds(a1, Value::of(q, 5), Matrix::zero(q, 2, 2)));

  // e1 -> e2, e2 -> 0 fails at the first basis pair.
  const auto w = check_reynolds(a1, Value::one(q), mat2(q, 0, 0, 1, 0));
  REQUIRE(w.has_value());
  CHECK(w->where == std::vector<std::size_t>{1, 1});
}

TEST_CASE("induced bracket and the operator homomorphism") {
  const FieldSpec q = FieldSpec::rationals();
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, q);

  // R = 0 induces the zero bracket.
  const ReynoldsContext zero = ReynoldsContext::create(a1, Value::one(q), Matrix::zero(q, 2, 2));
  CHECK(induced_bracket(zero).constants().is_zero());

  // R = id at weight 1 reproduces the same bracket.
  const ReynoldsContext idctx =
      ReynoldsContext::create(a1, Value::one(q), Matrix::identity(q, 2));
  CHECK(induced_bracket(idctx).constants() == a1.constants());

  // R = diag(1,2) at weight 0: [e2,e2]_R = 4 e1.
  const ReynoldsContext diag =
      ReynoldsContext::create(a1, Value::zero(q), mat2(q, 1, 0, 0, 2));
  const LeibnizAlgebra ind = induced_bracket(diag);
  CHECK(ind.bracket_basis(1, 1) == vec2(q, 4, 0));
  CHECK(ind.bracket_basis(0, 1).is_zero());

  // The operator maps the induced structure onto the original one.
  const ReynoldsContext src = ReynoldsContext::create(ind, diag.weight(), diag.op());
  CHECK(!check_homomorphism(diag.op(), src, diag));

  // A scaling map between copies of A1 with the zero operator.
  const ReynoldsContext z0 = ReynoldsContext::create(a1, Value::one(q), Matrix::zero(q, 2, 2));
  CHECK(!check_homomorphism(mat2(q, 4, 0, 0, 2), z0, z0));
  CHECK(!check_homomorphism(Matrix::identity(q, 2), z0, z0));
}

TEST_CASE("Reynolds residual vanishes on random vectors once basis pairs pass") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, f5);
  const Value w = Value::of(f5, 2);
  const Matrix op = mat2(f5, 2, 3, 0, 0);
  REQUIRE(!check_reynolds(a1, w, op));
  Sampler s(11);
  for (int t = 0; t < 100; ++t) {
    Vector x(f5, 2), y(f5, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      x[i] = s.value(f5);
      y[i] = s.value(f5);
    }
    const Vector rx = op.apply(x);
    const Vector ry = op.apply(y);
    const Vector core = a1.bracket(rx, ry);
    const Vector lhs = core + w * op.apply(core);
    const Vector rhs = op.apply(a1.bracket(x, ry)) + op.apply(a1.bracket(rx, y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dimension bounds on construction") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(LeibnizAlgebra::abelian(q, 9), InvalidStructure);
  CHECK_THROWS_AS(LeibnizAlgebra::abelian(q, 0), InvalidStructure);
}
