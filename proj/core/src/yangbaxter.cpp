#include "rlk/yangbaxter.hpp"

namespace rlk {

namespace {

struct Legs {
  std::size_t lo, hi;
};

Legs legs(Slot s) {
  switch (s) {
    case Slot::S12: return {0, 1};
    case Slot::S13: return {0, 2};
    default: return {1, 2};
  }
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch(what);
}

}  // namespace

Tensor3 yb_product(const LeibnizAlgebra& alg, Slot first, Slot second, const Matrix& rfirst,
                   const Matrix& rsecond) {
  const std::size_t n = alg.dim();
  require_square(rfirst, n, "tensor factor shape");
  require_square(rsecond, n, "tensor factor shape");
  const Legs la = legs(first);
  const Legs lb = legs(second);
  std::size_t shared;
  if (la.lo == lb.lo || la.lo == lb.hi) {
    shared = la.lo;
  } else {
    shared = la.hi;
  }
  const std::size_t other_a = la.lo == shared ? la.hi : la.lo;
  const std::size_t other_b = lb.lo == shared ? lb.hi : lb.lo;
  if (other_a == other_b) throw DimensionMismatch("tensor factors must differ in one leg");

  const Tensor3& c = alg.constants();
  Tensor3 out(alg.field(), n, n, n);
  for (std::size_t a1 = 0; a1 < n; ++a1) {
    for (std::size_t a2 = 0; a2 < n; ++a2) {
      if (rfirst.at(a1, a2).is_zero()) continue;
      const std::size_t a_shared = la.lo == shared ? a1 : a2;
      const std::size_t a_other = la.lo == shared ? a2 : a1;
      for (std::size_t b1 = 0; b1 < n; ++b1) {
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (rsecond.at(b1, b2).is_zero()) continue;
          const Value f = rfirst.at(a1, a2) * rsecond.at(b1, b2);
          const std::size_t b_shared = lb.lo == shared ? b1 : b2;
          const std::size_t b_other = lb.lo == shared ? b2 : b1;
          for (std::size_t t = 0; t < n; ++t) {
            const Value& coeff = c.at(a_shared, b_shared, t);
            if (coeff.is_zero()) continue;
            std::size_t idx[3];
            idx[shared] = t;
            idx[other_a] = a_other;
            idx[other_b] = b_other;
            out.at(idx[0], idx[1], idx[2]) += f * coeff;
          }
        }
      }
    }
  }
  return out;
}

Tensor3 clybe_defect(const LeibnizAlgebra& alg, const Matrix& rmat) {
  const Matrix rt = rmat.transpose();
  return yb_product(alg, Slot::S12, Slot::S23, rmat, rmat) +
         yb_product(alg, Slot::S13, Slot::S23, rmat, rmat) -
         yb_product(alg, Slot::S12, Slot::S13, rt, rmat) -
         yb_product(alg, Slot::S13, Slot::S12, rt, rmat);
}

Tensor3 coboundary_coproduct(const LeibnizAlgebra& alg, const Matrix& rmat) {
  const std::size_t n = alg.dim();
  require_square(rmat, n, "r-matrix shape");
  const Tensor3& c = alg.constants();
  Tensor3 d(alg.field(), n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t kk = 0; kk < n; ++kk) {
        if (rmat.at(j, kk).is_zero()) continue;
        const Value& f = rmat.at(j, kk);
        for (std::size_t k = 0; k < n; ++k) {
          // -r1 x [r2, e_i]
          if (!c.at(kk, i, k).is_zero()) d.at(i, j, k) -= f * c.at(kk, i, k);
          // [r2, e_i] x r1 + [e_i, r2] x r1
          if (!c.at(kk, i, k).is_zero()) d.at(i, k, j) += f * c.at(kk, i, k);
          if (!c.at(i, kk, k).is_zero()) d.at(i, k, j) += f * c.at(i, kk, k);
        }
      }
    }
  }
  return d;
}

CoboundaryConditions check_coboundary_conditions(const LeibnizAlgebra& alg, const Matrix& rmat) {
  const std::size_t n = alg.dim();
  require_square(rmat, n, "r-matrix shape");
  const Matrix rt = rmat.transpose();
  const Matrix skew = rt - rmat;
  CoboundaryConditions out{true, true, true};

  std::vector<Matrix> lmul, rmul;
  for (std::size_t p = 0; p < n; ++p) {
    lmul.push_back(alg.left_mult(p));
    rmul.push_back(alg.right_mult(p));
  }
  for (std::size_t p = 0; p < n && out.skew_right; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!(rmul[p] * skew * rmul[q].transpose()).is_zero()) {
        out.skew_right = false;
        break;
      }
    }
  }
  for (std::size_t p = 0; p < n && out.skew_mixed; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Matrix m = lmul[p] * skew * rmul[q].transpose() + rmul[q] * skew * lmul[p].transpose() +
                       lmul[q] * skew * lmul[p].transpose();
      if (!m.is_zero()) {
        out.skew_mixed = false;
        break;
      }
    }
  }

  const auto prod = [&](Slot a, Slot b, const Matrix& ra, const Matrix& rb) {
    return yb_product(alg, a, b, ra, rb);
  };
  const Tensor3 g1 = prod(Slot::S12, Slot::S23, rmat, rt) + prod(Slot::S13, Slot::S23, rmat, rt) -
                     prod(Slot::S12, Slot::S13, rmat, rt) - prod(Slot::S13, Slot::S12, rt, rmat);
  const Tensor3 g2 = prod(Slot::S12, Slot::S23, rmat, rmat) +
                     prod(Slot::S13, Slot::S23, rmat, rmat) -
                     prod(Slot::S12, Slot::S13, rt, rmat) - prod(Slot::S13, Slot::S12, rt, rt);
  const Tensor3 g3 = prod(Slot::S23, Slot::S13, rmat, rt) + prod(Slot::S12, Slot::S13, rt, rt) -
                     prod(Slot::S23, Slot::S12, rt, rt) - prod(Slot::S12, Slot::S23, rt, rt);
  for (std::size_t p = 0; p < n && out.assoc; ++p) {
    const Matrix both = lmul[p] + rmul[p];
    const Tensor3 t =
        g1.contract(1, both) - g2.contract(2, rmul[p]) - g3.contract(0, both);
    if (!t.is_zero()) out.assoc = false;
  }
  return out;
}

AdmissibleClybe check_admissible_clybe(const LeibnizAlgebra& alg, const Value& weight,
                                       const Matrix& op, const Matrix& co_op,
                                       const Matrix& rmat) {
  (void)weight;
  const std::size_t n = alg.dim();
  require_square(op, n, "operator shape");
  require_square(co_op, n, "operator shape");
  require_square(rmat, n, "r-matrix shape");
  AdmissibleClybe out;
  out.clybe = clybe_defect(alg, rmat).is_zero();
  out.eq_sr = co_op * rmat == rmat * op.transpose();
  out.eq_rs = rmat * co_op.transpose() == op * rmat;
  return out;
}

AdmissibleClybe check_admissible_clybe(const ReynoldsContext& ctx, const Matrix& co_op,
                                       const Matrix& rmat) {
  return check_admissible_clybe(ctx.alg(), ctx.weight(), ctx.op(), co_op, rmat);
}

TensorAdmissibility check_tensor_admissibility(const ReynoldsContext& ctx, const Matrix& co_op,
                                               const Matrix& rmat) {
  if (auto w = check_adjoint_admissible(ctx, co_op)) {
    throw PreconditionFailed("operator is not adjoint admissible: " + w->str());
  }
  const LeibnizAlgebra& g = ctx.alg();
  const std::size_t n = g.dim();
  require_square(rmat, n, "r-matrix shape");
  const Matrix& r = rmat;
  const Matrix rt = r.transpose();
  const Matrix& rop = ctx.op();
  const Matrix& s = co_op;
  const Value& w = ctx.weight();

  const Matrix p_sr = s * r - r * rop.transpose();        // (S x id - id x R)(r)
  const Matrix p_sr_t = s * rt - rt * rop.transpose();    // same on r^t
  const Matrix q_rs = rop * rt - rt * s.transpose();      // (R x id - id x S)(r^t)
  const Matrix v_sr = r * s.transpose() - rop * r;        // (id x S - R x id)(r)
  const Matrix v_sr_t = rt * s.transpose() - rop * rt;    // same on r^t

  TensorAdmissibility out{true, true, true};
  for (std::size_t p = 0; p < n; ++p) {
    const Matrix lp = g.left_mult(p);
    const Matrix rp = g.right_mult(p);
    const Matrix ls = g.left_mult(s.col(p));
    const Matrix rs = g.right_mult(s.col(p));
    const Matrix lr = g.left_mult(rop.col(p));
    const Matrix rr = g.right_mult(rop.col(p));

    if (out.coalgebra_side) {
      const Matrix o1 = rs + ls - s * rp - s * lp - w * (s * rs) - w * (s * ls);
      const Matrix o2 = rs - s * rp - w * (s * rs);
      if (!(o1 * q_rs + p_sr * o2.transpose()).is_zero()) out.coalgebra_side = false;
    }
    if (out.mixed_first) {
      const Matrix o3 = rr - rop * rp + w * (rop * rr);
      const Matrix o4 = w * (s * rr) + w * (s * lr) - s * rp - rr - lr - s * lp;
      if (!(p_sr * o3.transpose() + o4 * p_sr_t).is_zero()) out.mixed_first = false;
    }
    if (out.mixed_second) {
      const Matrix o5 = rr + s * rp - w * (s * rr);
      const Matrix o6 = rop * lp + rop * rp - rr - lr - w * (rop * rr) - w * (rop * lr);
      if (!(v_sr * o5.transpose() + o6 * v_sr_t).is_zero()) out.mixed_second = false;
    }
  }
  return out;
}

Matrix r_sharp(const Matrix& rmat) { return rmat.transpose(); }

OOperatorLevel check_o_operator(const Matrix& o_map, const Representation& rep,
                                const ReynoldsContext& ctx, const Matrix& module_op) {
  const std::size_t n = ctx.alg().dim();
  const std::size_t m = rep.vdim();
  if (o_map.rows() != n || o_map.cols() != m) throw DimensionMismatch("o-map shape");
  if (module_op.rows() != m || module_op.cols() != m) {
    throw DimensionMismatch("module operator shape");
  }
  const FieldSpec& spec = ctx.alg().field();
  bool weak = ctx.op() * o_map == o_map * module_op;
  for (std::size_t a = 0; a < m && weak; ++a) {
    const Vector ta = o_map.col(a);
    for (std::size_t b = 0; b < m; ++b) {
      const Vector tb = o_map.col(b);
      const Vector lhs = ctx.alg().bracket(ta, tb);
      const Vector inner = rep.left_of(ta).apply(Vector::basis(spec, m, b)) +
                           rep.right_of(tb).apply(Vector::basis(spec, m, a));
      if (lhs != o_map.apply(inner)) {
        weak = false;
        break;
      }
    }
  }
  if (!weak) return OOperatorLevel::None;
  if (check_reynolds_representation(rep, ctx, module_op)) return OOperatorLevel::Weak;
  return OOperatorLevel::Full;
}

OOperatorLift lift_o_operator(const Matrix& o_map, const Representation& rep,
                              const ReynoldsContext& ctx, const Matrix& module_op,
                              const Matrix& dual_module_op, const Matrix& co_op) {
  if (auto w = check_beta_admissible(rep, ctx, dual_module_op)) {
    throw PreconditionFailed("operator is not admissible: " + w->str());
  }
  const std::size_t n = ctx.alg().dim();
  const std::size_t m = rep.vdim();
  if (o_map.rows() != n || o_map.cols() != m) throw DimensionMismatch("o-map shape");
  require_square(co_op, n, "operator shape");

  const Representation dual = dual_representation(rep);
  SemidirectProduct sd = semidirect_product(dual, ctx, dual_module_op.transpose());
  ReynoldsContext double_ctx =
      ReynoldsContext::create(std::move(sd.alg), ctx.weight(), std::move(sd.op));

  Matrix r_lift(ctx.alg().field(), n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      r_lift.at(i, n + a) = o_map.at(i, a);
      r_lift.at(n + a, i) = o_map.at(i, a);
    }
  }
  Matrix lifted_co_op = Matrix::block_diag(co_op, module_op.transpose());
  return OOperatorLift{std::move(double_ctx), std::move(r_lift), std::move(lifted_co_op)};
}

CrossAdmissibility check_cross_admissibility(const ReynoldsContext& ctx, const Matrix& co_op,
                                             const Representation& rep, const Matrix& module_op,
                                             const Matrix& dual_module_op) {
  const std::size_t n = ctx.alg().dim();
  require_square(co_op, n, "operator shape");
  const Matrix& a = module_op;
  const Matrix& b = dual_module_op;
  const Value& w = ctx.weight();
  CrossAdmissibility out{true, true};
  for (std::size_t p = 0; p < n; ++p) {
    const Vector sp = co_op.col(p);
    const Matrix acts_s[2] = {rep.left_of(sp), rep.right_of(sp)};
    const Matrix acts_p[2] = {rep.left()[p], rep.right()[p]};
    for (int side = 0; side < 2; ++side) {
      const Matrix lhs = b * acts_s[side] + acts_s[side] * a;
      const Matrix rhs = b * acts_p[side] * a + w * (b * acts_s[side] * a);
      if (lhs != rhs) (side == 0 ? out.left : out.right) = false;
    }
  }
  return out;
}

PiForm PiForm::minus_x_plus(const Value& theta) {
  if (theta.is_zero()) throw InvalidStructure("theta must be nonzero");
  return {Kind::MinusXPlusTheta, theta};
}

PiForm PiForm::theta_over_x(const Value& theta) {
  if (theta.is_zero()) throw InvalidStructure("theta must be nonzero");
  return {Kind::ThetaXInverse, theta};
}

Matrix PiForm::apply(const Matrix& m) const {
  switch (kind) {
    case Kind::PlusX: return m;
    case Kind::MinusX: return -m;
    case Kind::MinusXPlusTheta:
      return theta * Matrix::identity(m.spec(), m.rows()) - m;
    case Kind::ThetaXInverse:
      try {
        return theta * m.inverse();
      } catch (const Degenerate&) {
        throw NotInvertible("inverse substitution on a singular operator");
      }
  }
  throw InvalidStructure("bad pi form");
}

std::string PiForm::str() const {
  switch (kind) {
    case Kind::PlusX: return "x";
    case Kind::MinusX: return "-x";
    case Kind::MinusXPlusTheta: return "-x+" + theta.str();
    case Kind::ThetaXInverse: return theta.str() + "/x";
  }
  return "?";
}

CheckResult check_pi_admissible(const ReynoldsContext& ctx, const Representation& rep,
                                const Matrix& module_op, const PiForm& pi) {
  const LeibnizAlgebra& g = ctx.alg();
  const std::size_t n = g.dim();
  const Value& w = ctx.weight();
  const Matrix& rop = ctx.op();
  const Matrix& a = module_op;
  if (pi.kind == PiForm::Kind::ThetaXInverse) {
    if (rop.det().is_zero()) throw NotInvertible("Reynolds operator");
    if (a.det().is_zero()) throw NotInvertible("module operator");
  }
  if (auto base = check_reynolds_representation(rep, ctx, a)) return base;
  if (pi.kind == PiForm::Kind::MinusX) return std::nullopt;

  const auto bk = [&](const Vector& x, const Vector& y) { return g.bracket(x, y); };
  const auto basis = [&](std::size_t i) { return Vector::basis(g.field(), n, i); };

  if (pi.kind == PiForm::Kind::PlusX) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector ri = rop.col(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector rj = rop.col(j);
        const Vector t1 = rop.apply(bk(basis(i), rj));
        const Vector t2 = rop.apply(bk(ri, basis(j)));
        const Vector t3 = w * rop.apply(bk(ri, rj));
        if (t1 != t2) return Witness{"pi-x-bracket", {i + 1, j + 1}, t1, t2};
        if (t2 != t3) return Witness{"pi-x-bracket", {i + 1, j + 1}, t2, t3};
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      const Vector rp = rop.col(p);
      const Matrix acts_r[2] = {rep.left_of(rp), rep.right_of(rp)};
      const Matrix acts_p[2] = {rep.left()[p], rep.right()[p]};
      for (int side = 0; side < 2; ++side) {
        const Matrix t1 = a * acts_r[side];
        const Matrix t2 = a * acts_p[side] * a;
        const Matrix t3 = w * (a * acts_r[side] * a);
        if (t1 != t2) {
          return Witness{"pi-x-module", {static_cast<std::size_t>(side + 1), p + 1},
                         t1.flatten(), t2.flatten()};
        }
        if (t2 != t3) {
          return Witness{"pi-x-module", {static_cast<std::size_t>(side + 1), p + 1},
                         t2.flatten(), t3.flatten()};
        }
      }
    }
    return std::nullopt;
  }

  const Value& th = pi.theta;
  if (pi.kind == PiForm::Kind::MinusXPlusTheta) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vector ri = rop.col(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Vector rj = rop.col(j);
        {
          const Vector lhs =
              th * bk(basis(i), basis(j)) - bk(basis(i), rj) - rop.apply(bk(basis(i), basis(j)));
          const Vector rhs =
              w * (th * bk(ri, basis(j)) - bk(ri, rj) - rop.apply(bk(ri, basis(j))));
          if (lhs != rhs) return Witness{"pi-shift-bracket-1", {i + 1, j + 1}, lhs, rhs};
        }
        {
          const Vector lhs =
              th * bk(basis(i), basis(j)) - bk(ri, basis(j)) - rop.apply(bk(basis(i), basis(j)));
          const Vector rhs =
              w * (th * bk(basis(i), rj) - bk(ri, rj) - rop.apply(bk(basis(i), rj)));
          if (lhs != rhs) return Witness{"pi-shift-bracket-2", {i + 1, j + 1}, lhs, rhs};
        }
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      const Vector rp = rop.col(p);
      const Matrix acts_r[2] = {rep.left_of(rp), rep.right_of(rp)};
      const Matrix acts_p[2] = {rep.left()[p], rep.right()[p]};
      for (int side = 0; side < 2; ++side) {
        {
          const Matrix lhs = th * acts_p[side] - acts_p[side] * a - a * acts_p[side];
          const Matrix rhs = w * (th * acts_r[side] - acts_r[side] * a - a * acts_r[side]);
          if (lhs != rhs) {
            return Witness{"pi-shift-module-1", {static_cast<std::size_t>(side + 1), p + 1},
                           lhs.flatten(), rhs.flatten()};
          }
        }
        {
          const Matrix lhs = th * acts_p[side] - acts_r[side] - a * acts_p[side];
          const Matrix rhs =
              w * (th * acts_p[side] * a - acts_r[side] * a - a * acts_p[side] * a);
          if (lhs != rhs) {
            return Witness{"pi-shift-module-2", {static_cast<std::size_t>(side + 1), p + 1},
                           lhs.flatten(), rhs.flatten()};
          }
        }
      }
    }
    return std::nullopt;
  }

  // theta / x
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ri = rop.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector rj = rop.col(j);
      {
        const Vector lhs = th * bk(basis(i), basis(j)) - rop.apply(bk(basis(i), rj));
        const Vector rhs = w * (th * bk(ri, basis(j)) - rop.apply(bk(ri, rj)));
        if (lhs != rhs) return Witness{"pi-inverse-bracket-1", {i + 1, j + 1}, lhs, rhs};
      }
      {
        const Vector lhs = th * bk(basis(i), basis(j)) - rop.apply(bk(ri, basis(j)));
        const Vector rhs = w * (th * bk(basis(i), rj) - rop.apply(bk(ri, rj)));
        if (lhs != rhs) return Witness{"pi-inverse-bracket-2", {i + 1, j + 1}, lhs, rhs};
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    const Vector rp = rop.col(p);
    const Matrix acts_r[2] = {rep.left_of(rp), rep.right_of(rp)};
    const Matrix acts_p[2] = {rep.left()[p], rep.right()[p]};
    for (int side = 0; side < 2; ++side) {
      {
        const Matrix lhs = th * acts_p[side] - a * acts_p[side] * a;
        const Matrix rhs = w * (th * acts_r[side] - a * acts_r[side] * a);
        if (lhs != rhs) {
          return Witness{"pi-inverse-module-1", {static_cast<std::size_t>(side + 1), p + 1},
                         lhs.flatten(), rhs.flatten()};
        }
      }
      {
        const Matrix lhs = th * acts_p[side] - a * acts_r[side];
        const Matrix rhs = w * (th * acts_p[side] * a - a * acts_r[side] * a);
        if (lhs != rhs) {
          return Witness{"pi-inverse-module-2", {static_cast<std::size_t>(side + 1), p + 1},
                         lhs.flatten(), rhs.flatten()};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace rlk
