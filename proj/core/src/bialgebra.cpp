#include "rlk/bialgebra.hpp"

namespace rlk {

namespace {

// delta(z) for a coefficient vector z, as an n x n matrix.
Matrix coproduct_of(const Tensor3& d, const Vector& z) {
  Matrix m(d.spec(), d.dim1(), d.dim2());
  for (std::size_t i = 0; i < d.dim0(); ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < d.dim1(); ++j) {
      for (std::size_t k = 0; k < d.dim2(); ++k) {
        if (!d.at(i, j, k).is_zero()) m.at(j, k) += z[i] * d.at(i, j, k);
      }
    }
  }
  return m;
}

void require_coproduct_shape(const Tensor3& d) {
  if (d.dim1() != d.dim0() || d.dim2() != d.dim0()) {
    throw DimensionMismatch("coproduct tensor must be n x n x n");
  }
}

}  // namespace

CheckResult check_coleibniz(const Tensor3& raw) {
  require_coproduct_shape(raw);
  const std::size_t n = raw.dim0();
  const FieldSpec& spec = raw.spec();
  for (std::size_t i = 0; i < n; ++i) {
    Tensor3 lhs(spec, n, n, n);   // (id x d) d
    Tensor3 mid(spec, n, n, n);   // (d x id) d
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (raw.at(i, j, k).is_zero()) continue;
        const Value& f = raw.at(i, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          for (std::size_t m = 0; m < n; ++m) {
            if (!raw.at(k, l, m).is_zero()) lhs.at(j, l, m) += f * raw.at(k, l, m);
            if (!raw.at(j, l, m).is_zero()) mid.at(l, m, k) += f * raw.at(j, l, m);
          }
        }
      }
    }
    Tensor3 rhs = mid;
    for (std::size_t a = 0; a < n; ++a) {  // (tau x id) of lhs
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) rhs.at(a, b, c) += lhs.at(b, a, c);
      }
    }
    if (lhs != rhs) {
      return Witness{"coleibniz-identity", {i + 1}, lhs.flatten(), rhs.flatten()};
    }
  }
  return std::nullopt;
}

Coproduct::Coproduct(FieldSpec field, std::size_t dim, Tensor3 d)
    : field_(field), dim_(dim), d_(std::move(d)) {}

Coproduct Coproduct::create(const FieldSpec& field, Tensor3 d) {
  if (d.spec() != field) throw FieldMismatch("coproduct field");
  if (auto w = check_coleibniz(d)) {
    throw InvalidStructure("not a Leibniz coproduct: " + w->str());
  }
  return Coproduct(field, d.dim0(), std::move(d));
}

CheckResult check_leibniz_bialgebra(const LeibnizAlgebra& alg, const Tensor3& d) {
  require_coproduct_shape(d);
  if (d.dim0() != alg.dim()) throw DimensionMismatch("coproduct/algebra dims differ");
  const std::size_t n = alg.dim();
  std::vector<Matrix> slices, lmul, rmul;
  for (std::size_t i = 0; i < n; ++i) {
    slices.push_back(d.slice0(i));
    lmul.push_back(alg.left_mult(i));
    rmul.push_back(alg.right_mult(i));
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Matrix lhs = rmul[p] * slices[q];
      const Matrix rhs = (rmul[q] * slices[p]).transpose();
      if (lhs != rhs) {
        return Witness{"bialgebra-compat-1", {p + 1, q + 1}, lhs.flatten(), rhs.flatten()};
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Matrix lhs = coproduct_of(d, alg.bracket_basis(p, q));
      const Matrix sym = slices[p] + slices[p].transpose();
      const Matrix rhs = sym * rmul[q].transpose() - lmul[q] * sym - rmul[q] * sym +
                         slices[q] * lmul[p].transpose() + lmul[p] * slices[q];
      if (lhs != rhs) {
        return Witness{"bialgebra-compat-2", {p + 1, q + 1}, lhs.flatten(), rhs.flatten()};
      }
    }
  }
  return std::nullopt;
}

CheckResult check_reynolds_coalgebra(const Tensor3& d, const Value& weight, const Matrix& co_op) {
  require_coproduct_shape(d);
  const std::size_t n = d.dim0();
  if (co_op.rows() != n || co_op.cols() != n) throw DimensionMismatch("operator shape");
  const Matrix& s = co_op;
  const Matrix st = s.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix di = d.slice0(i);
    const Matrix dsi = coproduct_of(d, s.col(i));  // delta(S e_i)
    const Matrix lhs = s * di * st + weight * (s * dsi * st);
    const Matrix rhs = s * dsi + dsi * st;
    if (lhs != rhs) {
      return Witness{"reynolds-coalgebra", {i + 1}, lhs.flatten(), rhs.flatten()};
    }
  }
  return std::nullopt;
}

CheckResult check_bundle_tensor_first(const Tensor3& d, const Value& weight, const Matrix& op,
                                      const Matrix& co_op) {
  require_coproduct_shape(d);
  const Matrix rt = op.transpose();
  for (std::size_t i = 0; i < d.dim0(); ++i) {
    const Matrix di = d.slice0(i);
    const Matrix dri = coproduct_of(d, op.col(i));  // delta(R e_i)
    const Matrix lhs = dri * rt + co_op * di * rt;
    const Matrix rhs = co_op * dri + weight * (co_op * dri * rt);
    if (lhs != rhs) {
      return Witness{"bundle-tensor-1", {i + 1}, lhs.flatten(), rhs.flatten()};
    }
  }
  return std::nullopt;
}

CheckResult check_bundle_tensor_second(const Tensor3& d, const Value& weight, const Matrix& op,
                                       const Matrix& co_op) {
  require_coproduct_shape(d);
  const Matrix st = co_op.transpose();
  for (std::size_t i = 0; i < d.dim0(); ++i) {
    const Matrix di = d.slice0(i);
    const Matrix dri = coproduct_of(d, op.col(i));
    const Matrix lhs = op * dri + op * di * st;
    const Matrix rhs = dri * st + weight * (op * dri * st);
    if (lhs != rhs) {
      return Witness{"bundle-tensor-2", {i + 1}, lhs.flatten(), rhs.flatten()};
    }
  }
  return std::nullopt;
}

CheckResult check_bundle_tensor_conditions(const Tensor3& d, const Value& weight,
                                           const Matrix& op, const Matrix& co_op) {
  if (auto w = check_bundle_tensor_first(d, weight, op, co_op)) return w;
  return check_bundle_tensor_second(d, weight, op, co_op);
}

BundleReport check_reynolds_bialgebra(const LeibnizAlgebra& alg, const Tensor3& d,
                                      const Value& weight, const Matrix& op,
                                      const Matrix& co_op) {
  BundleReport r;
  r.bialgebra = check_coleibniz(d);
  if (!r.bialgebra) r.bialgebra = check_leibniz_bialgebra(alg, d);
  r.reynolds_alg = check_reynolds(alg, weight, op);
  r.reynolds_coalg = check_reynolds_coalgebra(d, weight, co_op);
  r.adjoint_adm = check_adjoint_admissible(alg, weight, op, co_op);
  r.tensor_cond = check_bundle_tensor_conditions(d, weight, op, co_op);
  return r;
}

BialgebraBundle::BialgebraBundle(LeibnizAlgebra alg, Tensor3 d, Value weight, Matrix op,
                                 Matrix co_op)
    : alg_(std::move(alg)),
      d_(std::move(d)),
      weight_(std::move(weight)),
      op_(std::move(op)),
      co_op_(std::move(co_op)) {}

BialgebraBundle BialgebraBundle::create(LeibnizAlgebra alg, Tensor3 d, Value weight, Matrix op,
                                        Matrix co_op) {
  const BundleReport rep = check_reynolds_bialgebra(alg, d, weight, op, co_op);
  if (!rep.ok()) {
    const CheckResult* fails[] = {&rep.bialgebra, &rep.reynolds_alg, &rep.reynolds_coalg,
                                  &rep.adjoint_adm, &rep.tensor_cond};
    for (const CheckResult* f : fails) {
      if (*f) throw InvalidStructure("not a bialgebra bundle: " + (*f)->str());
    }
  }
  return BialgebraBundle(std::move(alg), std::move(d), std::move(weight), std::move(op),
                         std::move(co_op));
}

BilinearForm::BilinearForm(FieldSpec field, std::size_t dim, Matrix b)
    : field_(field), dim_(dim), b_(std::move(b)) {}

BilinearForm BilinearForm::create(const FieldSpec& field, Matrix b) {
  if (b.spec() != field) throw FieldMismatch("form field");
  if (b.rows() != b.cols()) throw DimensionMismatch("form must be square");
  if (!(b == -(b.transpose()))) throw NotSkew();
  if (b.det().is_zero()) throw Degenerate();
  const std::size_t n = b.rows();
  return BilinearForm(field, n, std::move(b));
}

BilinearForm BilinearForm::canonical_double(const FieldSpec& field, std::size_t n) {
  Matrix b(field, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    b.at(i, n + i) = -Value::one(field);
    b.at(n + i, i) = Value::one(field);
  }
  return create(field, std::move(b));
}

Value BilinearForm::eval(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("form arguments");
  Value acc = Value::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b_.at(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * b_.at(i, j) * y[j];
    }
  }
  return acc;
}

CheckResult check_quadratic_invariance(const Tensor3& bracket, const BilinearForm& form) {
  const std::size_t n = bracket.dim0();
  if (form.dim() != n) throw DimensionMismatch("form/bracket dims differ");
  const FieldSpec& spec = bracket.spec();
  const auto basis = [&](std::size_t i) { return Vector::basis(spec, n, i); };
  const auto bk = [&](std::size_t i, std::size_t j) {
    Vector v(spec, n);
    for (std::size_t k = 0; k < n; ++k) v[k] = bracket.at(i, j, k);
    return v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Value lhs = form.eval(basis(x), bk(y, z));
        const Value rhs = form.eval(bk(x, z), basis(y)) + form.eval(bk(z, x), basis(y));
        if (lhs != rhs) {
          Vector l(spec, 1), r(spec, 1);
          l[0] = lhs;
          r[0] = rhs;
          return Witness{"quadratic-invariance", {x + 1, y + 1, z + 1}, l, r};
        }
        const Value derived = -form.eval(bk(y, x), basis(z));
        if (lhs != derived) {
          Vector l(spec, 1), r(spec, 1);
          l[0] = lhs;
          r[0] = derived;
          return Witness{"quadratic-invariance-derived", {x + 1, y + 1, z + 1}, l, r};
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_quadratic_invariance(const LeibnizAlgebra& alg, const BilinearForm& form) {
  return check_quadratic_invariance(alg.constants(), form);
}

Matrix adjoint_operator(const BilinearForm& form, const Matrix& op) {
  if (op.rows() != form.dim() || op.cols() != form.dim()) {
    throw DimensionMismatch("operator/form dims differ");
  }
  return form.matrix().inverse() * op.transpose() * form.matrix();
}

Tensor3 dual_bracket_tensor(const Tensor3& d) {
  require_coproduct_shape(d);
  const std::size_t n = d.dim0();
  Tensor3 c(d.spec(), n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.at(j, k, i) = d.at(i, j, k);
    }
  }
  return c;
}

MatchedPairActions coadjoint_actions(const LeibnizAlgebra& alg, const Tensor3& d) {
  const std::size_t n = alg.dim();
  if (d.dim0() != n) throw DimensionMismatch("coproduct/algebra dims differ");
  MatchedPairActions acts;
  for (std::size_t p = 0; p < n; ++p) {
    const Matrix lt = alg.left_mult(p).transpose();
    const Matrix rt = alg.right_mult(p).transpose();
    acts.on2_left.push_back(-lt);
    acts.on2_right.push_back(lt + rt);
  }
  const Tensor3 cstar = dual_bracket_tensor(d);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix lstar(d.spec(), n, n), rstar(d.spec(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        lstar.at(i, k) = cstar.at(a, k, i);
        rstar.at(i, k) = cstar.at(k, a, i);
      }
    }
    const Matrix lt = lstar.transpose();
    const Matrix rt = rstar.transpose();
    acts.on1_left.push_back(-lt);
    acts.on1_right.push_back(lt + rt);
  }
  return acts;
}

Tensor3 matched_pair_bracket(const Tensor3& c1, const Tensor3& c2,
                             const MatchedPairActions& acts) {
  const std::size_t n = c1.dim0();
  const std::size_t m = c2.dim0();
  if (acts.on2_left.size() != n || acts.on2_right.size() != n || acts.on1_left.size() != m ||
      acts.on1_right.size() != m) {
    throw DimensionMismatch("matched-pair action counts");
  }
  Tensor3 c(c1.spec(), n + m, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = c1.at(i, j, k);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < m; ++k) c.at(n + a, n + b, n + k) = c2.at(a, b, k);
    }
  }
  // [e_i, f_b] = rho2_r(f_b) e_i + rho1_l(e_i) f_b
  // [f_a, e_j] = rho2_l(f_a) e_j + rho1_r(e_j) f_a
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < n; ++k) c.at(i, n + b, k) = acts.on1_right[b].at(k, i);
      for (std::size_t a = 0; a < m; ++a) c.at(i, n + b, n + a) = acts.on2_left[i].at(a, b);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.at(n + a, j, k) = acts.on1_left[a].at(k, j);
      for (std::size_t b = 0; b < m; ++b) c.at(n + a, j, n + b) = acts.on2_right[j].at(b, a);
    }
  }
  return c;
}

MatchedPairReport check_matched_pair(const LeibnizAlgebra& alg1, const LeibnizAlgebra& alg2,
                                     const Value& weight, const Matrix& op1, const Matrix& op2,
                                     const MatchedPairActions& acts) {
  MatchedPairReport rep;
  rep.rep1 = check_representation(alg1, alg2.dim(), acts.on2_left, acts.on2_right);
  if (!rep.rep1) {
    rep.rep1 = check_reynolds_module(alg1, weight, op1, alg2.dim(), acts.on2_left,
                                     acts.on2_right, op2);
  }
  rep.rep2 = check_representation(alg2, alg1.dim(), acts.on1_left, acts.on1_right);
  if (!rep.rep2) {
    rep.rep2 = check_reynolds_module(alg2, weight, op2, alg1.dim(), acts.on1_left,
                                     acts.on1_right, op1);
  }
  const Tensor3 sum = matched_pair_bracket(alg1.constants(), alg2.constants(), acts);
  rep.sum_leibniz = check_leibniz(sum);
  const Matrix block = Matrix::block_diag(op1, op2);
  if (!rep.sum_leibniz) {
    // Validated sum: probe the block operator on it.
    LeibnizAlgebra big = LeibnizAlgebra::create(alg1.field(), sum);
    rep.sum_reynolds = check_reynolds(big, weight, block);
  } else {
    rep.sum_reynolds = Witness{"sum-not-leibniz", {1}, Vector(alg1.field(), 0),
                               Vector(alg1.field(), 0)};
  }
  return rep;
}

MatchedPairReport check_matched_pair(const ReynoldsContext& ctx1, const ReynoldsContext& ctx2,
                                     const MatchedPairActions& acts) {
  if (!(ctx1.weight() == ctx2.weight())) throw InvalidStructure("weights differ");
  return check_matched_pair(ctx1.alg(), ctx2.alg(), ctx1.weight(), ctx1.op(), ctx2.op(), acts);
}

DoubleData build_double(const LeibnizAlgebra& alg, const Tensor3& d) {
  const Tensor3 cstar = dual_bracket_tensor(d);
  if (check_leibniz(cstar)) throw DualNotLeibniz();
  const MatchedPairActions acts = coadjoint_actions(alg, d);
  Tensor3 bracket = matched_pair_bracket(alg.constants(), cstar, acts);
  Matrix form = BilinearForm::canonical_double(alg.field(), alg.dim()).matrix();
  return DoubleData{std::move(bracket), std::move(form)};
}

ManinReport check_manin_triple(const LeibnizAlgebra& alg, const Tensor3& d, const Value& weight,
                               const Matrix& op, const Matrix& co_op) {
  ManinReport rep;
  const std::size_t n = alg.dim();
  const FieldSpec& spec = alg.field();
  const Tensor3 cstar = dual_bracket_tensor(d);
  rep.dual_leibniz = check_leibniz(cstar);
  if (rep.dual_leibniz) {
    const Witness blocked{"dual-not-leibniz", {1}, Vector(spec, 0), Vector(spec, 0)};
    rep.double_leibniz = rep.subalgebras = rep.invariance = rep.block_reynolds = blocked;
    return rep;
  }
  const MatchedPairActions acts = coadjoint_actions(alg, d);
  const Tensor3 sum = matched_pair_bracket(alg.constants(), cstar, acts);
  rep.double_leibniz = check_leibniz(sum);
  rep.subalgebras = std::nullopt;
  for (std::size_t half = 0; half < 2 && !rep.subalgebras; ++half) {
    const std::size_t lo = half * n;
    for (std::size_t i = 0; i < n && !rep.subalgebras; ++i) {
      for (std::size_t j = 0; j < n && !rep.subalgebras; ++j) {
        for (std::size_t k = 0; k < 2 * n; ++k) {
          const bool inside = half == 0 ? k < n : k >= n;
          if (!inside && !sum.at(lo + i, lo + j, k).is_zero()) {
            Vector l(spec, 1), r(spec, 1);
            l[0] = sum.at(lo + i, lo + j, k);
            rep.subalgebras = Witness{"half-not-subalgebra", {lo + i + 1, lo + j + 1, k + 1}, l, r};
            break;
          }
        }
      }
    }
  }
  const BilinearForm bd = BilinearForm::canonical_double(spec, n);
  rep.invariance = check_quadratic_invariance(sum, bd);
  if (!rep.double_leibniz) {
    LeibnizAlgebra big = LeibnizAlgebra::create(spec, sum);
    rep.block_reynolds = check_reynolds(big, weight, Matrix::block_diag(op, co_op.transpose()));
  } else {
    rep.block_reynolds =
        Witness{"double-not-leibniz", {1}, Vector(spec, 0), Vector(spec, 0)};
  }
  return rep;
}

}  // namespace rlk
