#include "rlk/representation.hpp"

namespace rlk {

namespace {

void require_actions(const LeibnizAlgebra& alg, std::size_t vdim,
                     const std::vector<Matrix>& act_left, const std::vector<Matrix>& act_right) {
  if (act_left.size() != alg.dim() || act_right.size() != alg.dim()) {
    throw DimensionMismatch("need one action matrix per basis element");
  }
  for (const auto* acts : {&act_left, &act_right}) {
    for (const Matrix& m : *acts) {
      if (m.rows() != vdim || m.cols() != vdim) throw DimensionMismatch("action matrix shape");
      if (m.spec() != alg.field()) throw FieldMismatch("action matrix field");
    }
  }
}

Matrix combine(const std::vector<Matrix>& acts, const Vector& z, const FieldSpec& spec,
               std::size_t vdim) {
  Matrix m = Matrix::zero(spec, vdim, vdim);
  for (std::size_t p = 0; p < acts.size(); ++p) {
    if (!z[p].is_zero()) m = m + z[p] * acts[p];
  }
  return m;
}

}  // namespace

CheckResult check_representation(const LeibnizAlgebra& alg, std::size_t vdim,
                                 const std::vector<Matrix>& act_left,
                                 const std::vector<Matrix>& act_right) {
  require_actions(alg, vdim, act_left, act_right);
  const std::size_t n = alg.dim();
  const auto of_vec = [&](const std::vector<Matrix>& acts, const Vector& z) {
    return combine(acts, z, alg.field(), vdim);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bij = alg.bracket_basis(i, j);
      const Matrix lhs1 = of_vec(act_left, bij);
      const Matrix rhs1 = act_left[i] * act_left[j] - act_left[j] * act_left[i];
      if (lhs1 != rhs1) {
        return Witness{"module-left-action", {1, i + 1, j + 1}, lhs1.flatten(), rhs1.flatten()};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector bij = alg.bracket_basis(i, j);
      const Matrix lhs2 = of_vec(act_right, bij);
      const Matrix rhs2 = act_left[i] * act_right[j] - act_right[j] * act_left[i];
      if (lhs2 != rhs2) {
        return Witness{"module-right-action", {2, i + 1, j + 1}, lhs2.flatten(), rhs2.flatten()};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs3 = -(act_right[j] * act_left[i]);
      const Matrix rhs3 = act_right[j] * act_right[i];
      if (lhs3 != rhs3) {
        return Witness{"module-mixed-action", {3, i + 1, j + 1}, lhs3.flatten(), rhs3.flatten()};
      }
    }
  }
  return std::nullopt;
}

Representation::Representation(LeibnizAlgebra alg, std::size_t vdim, std::vector<Matrix> l,
                               std::vector<Matrix> r)
    : alg_(std::move(alg)), vdim_(vdim), act_left_(std::move(l)), act_right_(std::move(r)) {}

Representation Representation::create(LeibnizAlgebra alg, std::size_t vdim,
                                      std::vector<Matrix> act_left,
                                      std::vector<Matrix> act_right) {
  if (auto w = check_representation(alg, vdim, act_left, act_right)) {
    throw InvalidStructure("not a representation: " + w->str());
  }
  return Representation(std::move(alg), vdim, std::move(act_left), std::move(act_right));
}

Matrix Representation::left_of(const Vector& z) const {
  return combine(act_left_, z, alg_.field(), vdim_);
}

Matrix Representation::right_of(const Vector& z) const {
  return combine(act_right_, z, alg_.field(), vdim_);
}

Representation adjoint_representation(const LeibnizAlgebra& alg) {
  std::vector<Matrix> l, r;
  l.reserve(alg.dim());
  r.reserve(alg.dim());
  for (std::size_t p = 0; p < alg.dim(); ++p) {
    l.push_back(alg.left_mult(p));
    r.push_back(alg.right_mult(p));
  }
  return Representation::create(alg, alg.dim(), std::move(l), std::move(r));
}

CheckResult check_reynolds_module(const LeibnizAlgebra& alg, const Value& weight,
                                  const Matrix& op, std::size_t vdim,
                                  const std::vector<Matrix>& act_left,
                                  const std::vector<Matrix>& act_right, const Matrix& module_op) {
  require_actions(alg, vdim, act_left, act_right);
  if (module_op.rows() != vdim || module_op.cols() != vdim) {
    throw DimensionMismatch("module operator shape");
  }
  const std::size_t n = alg.dim();
  for (std::size_t p = 0; p < n; ++p) {
    const Vector rp = op.col(p);
    const Matrix acts[2] = {combine(act_left, rp, alg.field(), vdim),
                            combine(act_right, rp, alg.field(), vdim)};
    const Matrix raw[2] = {act_left[p], act_right[p]};
    for (int side = 0; side < 2; ++side) {
      const Matrix lhs = acts[side] * module_op + weight * (module_op * acts[side] * module_op);
      const Matrix rhs = module_op * acts[side] + module_op * raw[side] * module_op;
      if (lhs != rhs) {
        return Witness{side == 0 ? "reynolds-module-left" : "reynolds-module-right",
                       {p + 1},
                       lhs.flatten(),
                       rhs.flatten()};
      }
    }
  }
  return std::nullopt;
}

CheckResult check_reynolds_representation(const Representation& rep, const ReynoldsContext& ctx,
                                          const Matrix& module_op) {
  if (!(rep.alg() == ctx.alg())) throw InvalidStructure("representation/context algebra differ");
  return check_reynolds_module(rep.alg(), ctx.weight(), ctx.op(), rep.vdim(), rep.left(),
                               rep.right(), module_op);
}

ReynoldsRepresentation::ReynoldsRepresentation(Representation rep, ReynoldsContext ctx,
                                               Matrix module_op)
    : rep_(std::move(rep)), ctx_(std::move(ctx)), module_op_(std::move(module_op)) {}

ReynoldsRepresentation ReynoldsRepresentation::create(Representation rep, ReynoldsContext ctx,
                                                      Matrix module_op) {
  if (auto w = check_reynolds_representation(rep, ctx, module_op)) {
    throw InvalidStructure("not a Reynolds representation: " + w->str());
  }
  return ReynoldsRepresentation(std::move(rep), std::move(ctx), std::move(module_op));
}

Representation dual_representation(const Representation& rep) {
  std::vector<Matrix> l, r;
  l.reserve(rep.alg().dim());
  r.reserve(rep.alg().dim());
  for (std::size_t p = 0; p < rep.alg().dim(); ++p) {
    const Matrix lt = rep.left()[p].transpose();
    const Matrix rt = rep.right()[p].transpose();
    l.push_back(-lt);
    r.push_back(lt + rt);
  }
  return Representation::create(rep.alg(), rep.vdim(), std::move(l), std::move(r));
}

CheckResult check_beta_admissible(const Representation& rep, const ReynoldsContext& ctx,
                                  const Matrix& dual_module_op) {
  if (!(rep.alg() == ctx.alg())) throw InvalidStructure("representation/context algebra differ");
  if (dual_module_op.rows() != rep.vdim() || dual_module_op.cols() != rep.vdim()) {
    throw DimensionMismatch("module operator shape");
  }
  const Matrix& b = dual_module_op;
  const Value& w = ctx.weight();
  for (std::size_t p = 0; p < ctx.alg().dim(); ++p) {
    const Vector rp = ctx.op().col(p);
    const Matrix acts[2] = {rep.left_of(rp), rep.right_of(rp)};
    const Matrix raw[2] = {rep.left()[p], rep.right()[p]};
    for (int side = 0; side < 2; ++side) {
      const Matrix lhs = b * raw[side] * b + acts[side] * b;
      const Matrix rhs = b * acts[side] + w * (b * acts[side] * b);
      if (lhs != rhs) {
        return Witness{side == 0 ? "beta-admissible-left" : "beta-admissible-right",
                       {p + 1},
                       lhs.flatten(),
                       rhs.flatten()};
      }
    }
  }
  return std::nullopt;
}

CheckResult check_adjoint_admissible(const LeibnizAlgebra& g, const Value& w, const Matrix& op,
                                     const Matrix& co_op) {
  const std::size_t n = g.dim();
  if (co_op.rows() != n || co_op.cols() != n) throw DimensionMismatch("operator shape");
  const Matrix& s = co_op;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = Vector::basis(g.field(), n, i);
    const Vector ri = op.col(i);
    const Vector si = s.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = Vector::basis(g.field(), n, j);
      const Vector rj = op.col(j);
      const Vector sj = s.col(j);
      {
        const Vector lhs = s.apply(g.bracket(ei, sj)) + g.bracket(ri, sj);
        const Vector rhs = s.apply(g.bracket(ri, ej)) + w * s.apply(g.bracket(ri, sj));
        if (lhs != rhs) return Witness{"adjoint-admissible-1", {i + 1, j + 1}, lhs, rhs};
      }
      {
        const Vector lhs = s.apply(g.bracket(si, ej)) + g.bracket(si, rj);
        const Vector rhs = s.apply(g.bracket(ei, rj)) + w * s.apply(g.bracket(si, rj));
        if (lhs != rhs) return Witness{"adjoint-admissible-2", {i + 1, j + 1}, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

CheckResult check_adjoint_admissible(const ReynoldsContext& ctx, const Matrix& co_op) {
  return check_adjoint_admissible(ctx.alg(), ctx.weight(), ctx.op(), co_op);
}

SemidirectProduct semidirect_product(const Representation& rep, const ReynoldsContext& ctx,
                                     const Matrix& module_op) {
  if (!(rep.alg() == ctx.alg())) throw InvalidStructure("representation/context algebra differ");
  if (module_op.rows() != rep.vdim() || module_op.cols() != rep.vdim()) {
    throw DimensionMismatch("module operator shape");
  }
  const std::size_t n = rep.alg().dim();
  const std::size_t m = rep.vdim();
  const FieldSpec& spec = rep.alg().field();
  Tensor3 c(spec, n + m, n + m, n + m);
  const Tensor3& base = rep.alg().constants();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.at(i, j, k) = base.at(i, j, k);
    }
  }
  // [e_i, f_b] = rho_l(e_i) f_b, [f_a, e_j] = rho_r(e_j) f_a.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        c.at(i, n + b, n + a) = rep.left()[i].at(a, b);
        c.at(n + b, i, n + a) = rep.right()[i].at(a, b);
      }
    }
  }
  LeibnizAlgebra alg = LeibnizAlgebra::create(spec, std::move(c));
  Matrix op = Matrix::block_diag(ctx.op(), module_op);
  return SemidirectProduct{std::move(alg), std::move(op)};
}

}  // namespace rlk
