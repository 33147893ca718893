#include <doctest.h>

#include "rlk/linalg.hpp"

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

}  // namespace

TEST_CASE("matrix algebra over Q") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix a = mat2(q, 1, 2, 3, 4);
  const Matrix b = mat2(q, 0, 1, 1, 0);
  CHECK(a * b == mat2(q, 2, 1, 4, 3));
  CHECK(a.transpose() == mat2(q, 1, 3, 2, 4));
  CHECK(a.det() == Value::of(q, -2));
  CHECK(a.inverse() * a == Matrix::identity(q, 2));
  CHECK_THROWS_AS(mat2(q, 1, 2, 2, 4).inverse(), Degenerate);
}

TEST_CASE("inverse over a prime field") {
  const FieldSpec f5 = FieldSpec::prime(5);
  const Matrix a = mat2(f5, 1, 2, 3, 4);
  CHECK(a * a.inverse() == Matrix::identity(f5, 2));
  CHECK(a.det() == Value::of(f5, -2));
}

TEST_CASE("tensor contraction replaces one slot") {
  const FieldSpec q = FieldSpec::rationals();
  Tensor3 t(q, 2, 2, 2);
  t.at(1, 0, 1) = Value::of(q, 3);
  const Matrix swap = mat2(q, 0, 1, 1, 0);
  const Tensor3 s0 = t.contract(0, swap);
  CHECK(s0.at(0, 0, 1) == Value::of(q, 3));
  const Tensor3 s2 = t.contract(2, swap);
  CHECK(s2.at(1, 0, 0) == Value::of(q, 3));
  CHECK(t.first_nonzero().value() == std::array<std::size_t, 3>{1, 0, 1});
}

TEST_CASE("block diagonal composition") {
  const FieldSpec q = FieldSpec::rationals();
  const Matrix a = mat2(q, 1, 2, 3, 4);
  const Matrix b = Matrix::identity(q, 1);
  const Matrix d = Matrix::block_diag(a, b);
  CHECK(d.rows() == 3);
  CHECK(d.at(2, 2).is_one());
  CHECK(d.at(0, 1) == Value::of(q, 2));
  CHECK(d.at(2, 0).is_zero());
}
