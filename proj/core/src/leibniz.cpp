#include "rlk/leibniz.hpp"

#include <sstream>

namespace rlk {

std::string Witness::str() const {
  std::ostringstream os;
  os << relation << " fails at (";
  for (std::size_t i = 0; i < where.size(); ++i) {
    if (i) os << ",";
    os << where[i];
  }
  os << ")";
  return os.str();
}

namespace {

Witness make_witness(std::string relation, std::vector<std::size_t> where, Vector lhs,
                     Vector rhs) {
  return Witness{std::move(relation), std::move(where), std::move(lhs), std::move(rhs)};
}

Vector raw_bracket(const Tensor3& c, const Vector& x, const Vector& y) {
  const std::size_t n = c.dim0();
  Vector z(c.spec(), c.dim2());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.dim1(); ++j) {
      if (y[j].is_zero()) continue;
      const Value f = x[i] * y[j];
      for (std::size_t k = 0; k < c.dim2(); ++k) {
        if (!c.at(i, j, k).is_zero()) z[k] += f * c.at(i, j, k);
      }
    }
  }
  return z;
}

Vector raw_bracket_basis(const Tensor3& c, std::size_t i, std::size_t j) {
  Vector z(c.spec(), c.dim2());
  for (std::size_t k = 0; k < c.dim2(); ++k) z[k] = c.at(i, j, k);
  return z;
}

}  // namespace

CheckResult check_leibniz(const Tensor3& raw) {
  const std::size_t n = raw.dim0();
  if (raw.dim1() != n || raw.dim2() != n) {
    throw DimensionMismatch("structure tensor must be n x n x n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = raw_bracket(raw, Vector::basis(raw.spec(), n, i),
                                       raw_bracket_basis(raw, j, k));
        const Vector rhs =
            raw_bracket(raw, raw_bracket_basis(raw, i, j), Vector::basis(raw.spec(), n, k)) +
            raw_bracket(raw, Vector::basis(raw.spec(), n, j), raw_bracket_basis(raw, i, k));
        if (lhs != rhs) {
          return make_witness("leibniz-identity", {i + 1, j + 1, k + 1}, lhs, rhs);
        }
      }
    }
  }
  return std::nullopt;
}

LeibnizAlgebra::LeibnizAlgebra(FieldSpec field, std::size_t dim, Tensor3 c)
    : field_(field), dim_(dim), c_(std::move(c)) {}

LeibnizAlgebra LeibnizAlgebra::create(const FieldSpec& field, Tensor3 c) {
  if (c.spec() != field) throw FieldMismatch("tensor field differs from declared field");
  const std::size_t n = c.dim0();
  if (n == 0 || n > kMaxDim) {
    throw InvalidStructure("dimension " + std::to_string(n) + " out of range [1, 8]");
  }
  if (auto w = check_leibniz(c)) {
    throw InvalidStructure("not a Leibniz algebra: " + w->str());
  }
  return LeibnizAlgebra(field, n, std::move(c));
}

LeibnizAlgebra LeibnizAlgebra::abelian(const FieldSpec& field, std::size_t dim) {
  return create(field, Tensor3(field, dim, dim, dim));
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket arguments");
  return raw_bracket(c_, x, y);
}

Vector LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return raw_bracket_basis(c_, i, j);
}

Matrix LeibnizAlgebra::left_mult(std::size_t p) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c_.at(p, j, k);
  }
  return m;
}

Matrix LeibnizAlgebra::right_mult(std::size_t p) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c_.at(j, p, k);
  }
  return m;
}

Matrix LeibnizAlgebra::left_mult(const Vector& z) const {
  Matrix m = Matrix::zero(field_, dim_, dim_);
  for (std::size_t p = 0; p < dim_; ++p) {
    if (!z[p].is_zero()) m = m + z[p] * left_mult(p);
  }
  return m;
}

Matrix LeibnizAlgebra::right_mult(const Vector& z) const {
  Matrix m = Matrix::zero(field_, dim_, dim_);
  for (std::size_t p = 0; p < dim_; ++p) {
    if (!z[p].is_zero()) m = m + z[p] * right_mult(p);
  }
  return m;
}

CheckResult check_reynolds(const LeibnizAlgebra& alg, const Value& weight, const Matrix& op) {
  if (weight.spec() != alg.field()) throw FieldMismatch("weight field");
  if (op.rows() != alg.dim() || op.cols() != alg.dim()) {
    throw DimensionMismatch("operator must be dim x dim");
  }
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector rx = op.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ry = op.col(j);
      const Vector core = alg.bracket(rx, ry);
      const Vector lhs = core + weight * op.apply(core);
      const Vector rhs =
          op.apply(alg.bracket(Vector::basis(alg.field(), n, i), ry)) +
          op.apply(alg.bracket(rx, Vector::basis(alg.field(), n, j)));
      if (lhs != rhs) {
        return Witness{"reynolds-identity", {i + 1, j + 1}, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

ReynoldsContext::ReynoldsContext(LeibnizAlgebra alg, Value weight, Matrix op)
    : alg_(std::move(alg)), weight_(std::move(weight)), op_(std::move(op)) {}

ReynoldsContext ReynoldsContext::create(LeibnizAlgebra alg, Value weight, Matrix op) {
  if (auto w = check_reynolds(alg, weight, op)) {
    throw InvalidStructure("not a Reynolds operator: " + w->str());
  }
  return ReynoldsContext(std::move(alg), std::move(weight), std::move(op));
}

LeibnizAlgebra induced_bracket(const ReynoldsContext& ctx) {
  const LeibnizAlgebra& g = ctx.alg();
  const std::size_t n = g.dim();
  Tensor3 c(g.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(g.field(), n, i);
    const Vector ri = ctx.op().col(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = Vector::basis(g.field(), n, j);
      const Vector rj = ctx.op().col(j);
      const Vector v =
          g.bracket(ei, rj) + g.bracket(ri, ej) - ctx.weight() * g.bracket(ri, rj);
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = v[k];
    }
  }
  return LeibnizAlgebra::create(g.field(), std::move(c));
}

CheckResult check_homomorphism(const Matrix& map, const ReynoldsContext& src,
                               const ReynoldsContext& dst) {
  if (map.cols() != src.alg().dim() || map.rows() != dst.alg().dim()) {
    throw DimensionMismatch("homomorphism shapes");
  }
  const std::size_t n = src.alg().dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = map.apply(src.alg().bracket_basis(i, j));
      const Vector rhs = dst.alg().bracket(map.col(i), map.col(j));
      if (lhs != rhs) return Witness{"bracket-homomorphism", {i + 1, j + 1}, lhs, rhs};
    }
  }
  const Matrix lhs = map * src.op();
  const Matrix rhs = dst.op() * map;
  if (lhs != rhs) {
    return Witness{"operator-intertwining", {1}, lhs.flatten(), rhs.flatten()};
  }
  return std::nullopt;
}

}  // namespace rlk
