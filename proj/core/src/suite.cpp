#include "rlk/suite.hpp"

#include <map>

#include "rlk/io.hpp"

namespace rlk {

std::optional<SuiteSection> suite_from_name(const std::string& name) {
  if (name == "all") return SuiteSection::All;
  if (name == "sec2") return SuiteSection::Sec2;
  if (name == "sec3") return SuiteSection::Sec3;
  if (name == "sec4") return SuiteSection::Sec4;
  if (name == "sec5") return SuiteSection::Sec5;
  return std::nullopt;
}

std::string SweepResult::summary() const {
  std::string s = std::to_string(fixtures) + " fixtures, " + std::to_string(positives) +
                  " positive, " + std::to_string(violations) + " violations";
  if (!first_violation.empty()) s += "; first: " + first_violation;
  return s;
}

namespace {

const FieldSpec kF5 = FieldSpec::prime(5);

void record(SweepResult& r, bool condition, const std::string& what) {
  if (!condition) {
    ++r.violations;
    if (r.first_violation.empty()) r.first_violation = what;
  }
}

/// All Reynolds operators on a builtin algebra over F_5, per weight residue.
const std::vector<Matrix>& reynolds_pool(AlgebraId id, const Value& lam) {
  static std::map<std::pair<int, std::uint64_t>, std::vector<Matrix>> cache;
  const auto key = std::make_pair(id == AlgebraId::A1 ? 1 : 2, lam.res());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const LeibnizAlgebra alg = builtin_algebra(id, kF5);
  std::vector<Matrix> ops;
  Matrix m(kF5, 2, 2);
  for (std::uint64_t a = 0; a < 5; ++a) {
    for (std::uint64_t b = 0; b < 5; ++b) {
      for (std::uint64_t c = 0; c < 5; ++c) {
        for (std::uint64_t d = 0; d < 5; ++d) {
          m.at(0, 0) = Value::residue(kF5, a);
          m.at(0, 1) = Value::residue(kF5, b);
          m.at(1, 0) = Value::residue(kF5, c);
          m.at(1, 1) = Value::residue(kF5, d);
          if (!check_reynolds(alg, lam, m)) ops.push_back(m);
        }
      }
    }
  }
  return cache.emplace(key, std::move(ops)).first->second;
}

struct Draw {
  AlgebraId id;
  LeibnizAlgebra alg;
  Value lam;
  Matrix op;

  ReynoldsContext ctx() const { return ReynoldsContext::create(alg, lam, op); }
};

Draw draw_reynolds(Sampler& rng, bool weight_zero) {
  const AlgebraId id = rng.coin() ? AlgebraId::A1 : AlgebraId::A2;
  const Value lam = weight_zero ? Value::zero(kF5) : rng.nonzero(kF5);
  const auto& pool = reynolds_pool(id, lam);
  return Draw{id, builtin_algebra(id, kF5), lam, pool[rng.uniform(pool.size())]};
}

/// Adjoint-admissible co-operators for a context, by exhaustive scan.
std::vector<Matrix> admissible_co_ops(const LeibnizAlgebra& alg, const Value& lam,
                                      const Matrix& op) {
  std::vector<Matrix> out;
  Matrix m(kF5, 2, 2);
  for (std::uint64_t a = 0; a < 5; ++a) {
    for (std::uint64_t b = 0; b < 5; ++b) {
      for (std::uint64_t c = 0; c < 5; ++c) {
        for (std::uint64_t d = 0; d < 5; ++d) {
          m.at(0, 0) = Value::residue(kF5, a);
          m.at(0, 1) = Value::residue(kF5, b);
          m.at(1, 0) = Value::residue(kF5, c);
          m.at(1, 1) = Value::residue(kF5, d);
          if (!check_adjoint_admissible(alg, lam, op, m)) out.push_back(m);
        }
      }
    }
  }
  return out;
}

Matrix random_symmetric(Sampler& rng, const FieldSpec& spec, std::size_t n) {
  Matrix m = Matrix::random(rng, spec, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
  }
  return m;
}

/// A triangular bundle fixture: symmetric defect-free r with a co-operator
/// solved from the intertwining equation, when one exists.
struct TriangularFixture {
  Draw base;
  Matrix r;
  Matrix co_op;
  Tensor3 delta;
};

std::optional<TriangularFixture> draw_triangular(Sampler& rng, bool weight_zero) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Draw d = draw_reynolds(rng, weight_zero);
    const Matrix r = random_symmetric(rng, kF5, 2);
    if (r.det().is_zero()) continue;
    if (!clybe_defect(d.alg, r).is_zero()) continue;
    const Matrix s = r * d.op.transpose() * r.inverse();
    if (!check_admissible_clybe(d.alg, d.lam, d.op, s, r).all()) continue;
    if (check_adjoint_admissible(d.alg, d.lam, d.op, s)) continue;
    Tensor3 delta = coboundary_coproduct(d.alg, r);
    return TriangularFixture{std::move(d), r, s, std::move(delta)};
  }
  return std::nullopt;
}

bool routes_agree(const LeibnizAlgebra& alg, const Tensor3& delta, const Value& lam,
                  const Matrix& op, const Matrix& co_op, std::string& why) {
  const bool bundle = check_reynolds_bialgebra(alg, delta, lam, op, co_op).ok();

  bool pair = false;
  const Tensor3 cstar = dual_bracket_tensor(delta);
  const bool dual_ok = !check_leibniz(cstar);
  if (dual_ok) {
    const MatchedPairActions acts = coadjoint_actions(alg, delta);
    const LeibnizAlgebra dual = LeibnizAlgebra::create(kF5, cstar);
    pair = check_matched_pair(alg, dual, lam, op, co_op.transpose(), acts).ok();
  }
  const bool manin = check_manin_triple(alg, delta, lam, op, co_op).ok();

  if (bundle != pair || pair != manin) {
    why = "bundle=" + std::to_string(bundle) + " pair=" + std::to_string(pair) +
          " manin=" + std::to_string(manin);
    return false;
  }
  why = bundle ? "valid" : "invalid";
  return true;
}

}  // namespace

SweepResult sweep_induced_bracket(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const Draw d = draw_reynolds(rng, weight_zero);
    ++res.fixtures;
    try {
      const ReynoldsContext ctx = d.ctx();
      const LeibnizAlgebra ind = induced_bracket(ctx);  // validates the Leibniz identity
      const ReynoldsContext src = ReynoldsContext::create(ind, d.lam, d.op);
      record(res, !check_homomorphism(d.op, src, ctx), "operator not a homomorphism");
      ++res.positives;
    } catch (const Error& e) {
      record(res, false, e.what());
    }
  }
  return res;
}

SweepResult sweep_dual_representation(std::uint64_t seed, std::size_t count) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const AlgebraId id = rng.coin() ? AlgebraId::A1 : AlgebraId::A2;
    LeibnizAlgebra alg = builtin_algebra(id, kF5);
    Representation rep = adjoint_representation(alg);
    switch (rng.uniform(4)) {
      case 0: break;
      case 1: rep = dual_representation(rep); break;
      case 2: {
        // Conjugate by a random invertible map.
        Matrix f = Matrix::random(rng, kF5, 2, 2);
        if (f.det().is_zero()) break;
        const Matrix finv = f.inverse();
        std::vector<Matrix> l, r;
        for (std::size_t p = 0; p < 2; ++p) {
          l.push_back(f * rep.left()[p] * finv);
          r.push_back(f * rep.right()[p] * finv);
        }
        rep = Representation::create(alg, 2, std::move(l), std::move(r));
        break;
      }
      default: {
        const std::size_t m = 1 + rng.uniform(3);
        rep = Representation::create(alg, m,
                                     std::vector<Matrix>(2, Matrix::zero(kF5, m, m)),
                                     std::vector<Matrix>(2, Matrix::zero(kF5, m, m)));
        break;
      }
    }
    ++res.fixtures;
    try {
      dual_representation(rep);  // validates on construction
      ++res.positives;
    } catch (const Error& e) {
      record(res, false, e.what());
    }
  }
  return res;
}

SweepResult sweep_beta_duality(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const ReynoldsContext ctx = d.ctx();
    const Representation rep = adjoint_representation(d.alg);
    const Matrix beta = Matrix::random(rng, kF5, 2, 2);
    ++res.fixtures;
    const bool direct = !check_beta_admissible(rep, ctx, beta);
    const bool dual =
        !check_reynolds_representation(dual_representation(rep), ctx, beta.transpose());
    record(res, direct == dual, "direct and dual admissibility disagree");
    res.positives += direct;
  }
  return res;
}

SweepResult sweep_semidirect(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const ReynoldsContext ctx = d.ctx();
    const Representation rep =
        rng.coin() ? adjoint_representation(d.alg) : dual_representation(adjoint_representation(d.alg));
    const Matrix alpha = rng.coin() ? d.op : Matrix::random(rng, kF5, 2, 2);
    ++res.fixtures;
    const SemidirectProduct sd = semidirect_product(rep, ctx, alpha);
    const bool block = !check_reynolds(sd.alg, d.lam, sd.op);
    const bool module = !check_reynolds_representation(rep, ctx, alpha);
    record(res, block == module, "semidirect equivalence broken");
    res.positives += block;
  }
  return res;
}

SweepResult sweep_equivalence_routes(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    auto fx = draw_triangular(rng, weight_zero);
    if (!fx) break;
    // The constructed bundle, then single-entry mutants of each ingredient,
    // then a fully random co-operator.
    std::vector<std::pair<Tensor3, std::pair<Matrix, Matrix>>> cases;
    cases.emplace_back(fx->delta, std::make_pair(fx->base.op, fx->co_op));
    {
      Matrix s = fx->co_op;
      s.at(rng.uniform(2), rng.uniform(2)) += Value::one(kF5);
      cases.emplace_back(fx->delta, std::make_pair(fx->base.op, s));
    }
    {
      Matrix r = fx->base.op;
      r.at(rng.uniform(2), rng.uniform(2)) += Value::one(kF5);
      cases.emplace_back(fx->delta, std::make_pair(r, fx->co_op));
    }
    {
      Tensor3 d = fx->delta;
      d.at(rng.uniform(2), rng.uniform(2), rng.uniform(2)) += Value::one(kF5);
      cases.emplace_back(d, std::make_pair(fx->base.op, fx->co_op));
    }
    cases.emplace_back(fx->delta,
                       std::make_pair(fx->base.op, Matrix::random(rng, kF5, 2, 2)));
    for (auto& [delta, ops] : cases) {
      ++res.fixtures;
      std::string why;
      record(res, routes_agree(fx->base.alg, delta, fx->base.lam, ops.first, ops.second, why),
             why);
      if (why == "valid") ++res.positives;
    }
  }
  return res;
}

SweepResult sweep_double_adjoint(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    auto fx = draw_triangular(rng, weight_zero);
    if (!fx) break;
    if (!check_reynolds_bialgebra(fx->base.alg, fx->delta, fx->base.lam, fx->base.op, fx->co_op)
             .ok()) {
      continue;
    }
    ++res.fixtures;
    ++res.positives;
    const DoubleData dd = build_double(fx->base.alg, fx->delta);
    const BilinearForm bd = BilinearForm::create(kF5, dd.form);
    const Matrix block = Matrix::block_diag(fx->base.op, fx->co_op.transpose());
    const Matrix mirror = Matrix::block_diag(fx->co_op, fx->base.op.transpose());
    record(res, adjoint_operator(bd, block) == mirror, "pairing adjoint mismatch");

    const LeibnizAlgebra big = LeibnizAlgebra::create(kF5, dd.bracket);
    record(res, !check_adjoint_admissible(big, fx->base.lam, block, mirror),
           "mirror operator not admissible on the double");
    record(res,
           !check_adjoint_admissible(fx->base.alg, fx->base.lam, fx->base.op, fx->co_op),
           "restriction to the algebra fails");
    const Tensor3 cstar = dual_bracket_tensor(fx->delta);
    const LeibnizAlgebra dual = LeibnizAlgebra::create(kF5, cstar);
    record(res,
           !check_adjoint_admissible(dual, fx->base.lam, fx->co_op.transpose(),
                                     fx->base.op.transpose()),
           "restriction to the dual fails");
  }
  return res;
}

SweepResult sweep_quadratic_derived(std::uint64_t seed, std::size_t count) {
  Sampler rng(seed);
  SweepResult res;
  const auto eval = [&](const Tensor3& c, const Matrix& b, bool& inv14, bool& inv15) {
    const std::size_t n = c.dim0();
    inv14 = inv15 = true;
    const auto form = [&](const Vector& x, const Vector& y) {
      Value acc = Value::zero(kF5);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) acc += x[i] * b.at(i, j) * y[j];
      }
      return acc;
    };
    const auto bk = [&](std::size_t i, std::size_t j) {
      Vector v(kF5, n);
      for (std::size_t k = 0; k < n; ++k) v[k] = c.at(i, j, k);
      return v;
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const Vector ex = Vector::basis(kF5, n, x);
          const Vector ey = Vector::basis(kF5, n, y);
          const Vector ez = Vector::basis(kF5, n, z);
          const Value lhs = form(ex, bk(y, z));
          if (lhs != form(bk(x, z), ey) + form(bk(z, x), ey)) inv14 = false;
          if (lhs != -form(bk(y, x), ez)) inv15 = false;
        }
      }
    }
  };
  while (res.fixtures < count) {
    auto fx = draw_triangular(rng, true);
    if (!fx) break;
    const DoubleData dd = build_double(fx->base.alg, fx->delta);
    // The canonical form, then skewed perturbations of it.
    for (int variant = 0; variant < 3 && res.fixtures < count; ++variant) {
      Matrix b = dd.form;
      if (variant > 0) {
        const std::size_t i = rng.uniform(4), j = rng.uniform(4);
        if (i != j) {
          const Value v = rng.nonzero(kF5);
          b.at(i, j) += v;
          b.at(j, i) -= v;
        }
      }
      ++res.fixtures;
      bool inv14 = false, inv15 = false;
      eval(dd.bracket, b, inv14, inv15);
      if (inv14) {
        ++res.positives;
        record(res, inv15, "first invariance holds but the derived identity fails");
      }
    }
  }
  return res;
}

SweepResult sweep_dual_quadratic_rep(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    auto fx = draw_triangular(rng, weight_zero);
    if (!fx) break;
    if (!check_reynolds_bialgebra(fx->base.alg, fx->delta, fx->base.lam, fx->base.op, fx->co_op)
             .ok()) {
      continue;
    }
    ++res.fixtures;
    ++res.positives;
    const DoubleData dd = build_double(fx->base.alg, fx->delta);
    const LeibnizAlgebra big = LeibnizAlgebra::create(kF5, dd.bracket);
    const BilinearForm bd = BilinearForm::create(kF5, dd.form);
    const Matrix block = Matrix::block_diag(fx->base.op, fx->co_op.transpose());
    const ReynoldsContext ctx = ReynoldsContext::create(big, fx->base.lam, block);
    const Matrix hat = adjoint_operator(bd, block);
    const Representation dual = dual_representation(adjoint_representation(big));
    record(res, !check_reynolds_representation(dual, ctx, hat.transpose()),
           "dual module with the pairing adjoint fails");
  }
  return res;
}

SweepResult sweep_intertwine_mirrors(std::uint64_t seed, std::size_t count) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    const Matrix r = Matrix::random(rng, kF5, 2, 2);
    if (r.det().is_zero()) continue;
    const Matrix rop = Matrix::random(rng, kF5, 2, 2);
    ++res.fixtures;
    ++res.positives;
    const Matrix s = r * rop.transpose() * r.inverse();
    record(res, s * r == r * rop.transpose(), "left equation not solved");
    record(res, r.transpose() * s.transpose() == rop * r.transpose(),
           "first mirror implication fails");
    const Matrix s2 = (r.inverse() * rop * r).transpose();
    record(res, r * s2.transpose() == rop * r, "right equation not solved");
    record(res, s2 * r.transpose() == r.transpose() * rop.transpose(),
           "second mirror implication fails");
    Matrix sym = random_symmetric(rng, kF5, 2);
    const Matrix probe = Matrix::random(rng, kF5, 2, 2);
    const bool left = probe * sym == sym * rop.transpose();
    const bool right = sym * probe.transpose() == rop * sym;
    record(res, left == right, "symmetric equivalence fails");
  }
  return res;
}

SweepResult sweep_negated_operator_bundles(std::uint64_t seed, std::size_t count,
                                           bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const Draw d = draw_reynolds(rng, weight_zero);
    Matrix r = random_symmetric(rng, kF5, 2);
    if (!clybe_defect(d.alg, r).is_zero()) r = Matrix::zero(kF5, 2, 2);
    const Tensor3 delta = coboundary_coproduct(d.alg, r);
    ++res.fixtures;
    const Matrix neg = -d.op;
    const BundleReport rep = check_reynolds_bialgebra(d.alg, delta, d.lam, d.op, neg);
    const bool first_three = !rep.bialgebra && !rep.reynolds_alg && !rep.reynolds_coalg;
    record(res, rep.ok() == first_three,
           "negated operator bundle differs from its first three axioms");
    res.positives += rep.ok();
  }
  return res;
}

SweepResult sweep_triangular_construction(std::uint64_t seed, std::size_t count,
                                          bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    auto fx = draw_triangular(rng, weight_zero);
    if (!fx) break;
    ++res.fixtures;
    ++res.positives;
    // Symmetric admissible solution on an admissible context: the whole bundle holds.
    record(res, check_coboundary_conditions(fx->base.alg, fx->r).all(),
           "coboundary conditions fail on a solution");
    record(res, !check_coleibniz(fx->delta), "induced coproduct not co-Leibniz");
    record(res, !check_leibniz_bialgebra(fx->base.alg, fx->delta),
           "induced coproduct not compatible");
    record(res,
           check_reynolds_bialgebra(fx->base.alg, fx->delta, fx->base.lam, fx->base.op,
                                    fx->co_op)
               .ok(),
           "triangular bundle fails an axiom");
  }
  return res;
}

SweepResult sweep_tensor_admissibility(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const auto co_ops = admissible_co_ops(d.alg, d.lam, d.op);
    if (co_ops.empty()) continue;
    const Matrix s = co_ops[rng.uniform(co_ops.size())];
    Matrix r = Matrix::random(rng, kF5, 2, 2);
    if (rng.coin()) r.at(1, 0) = r.at(0, 1);
    ++res.fixtures;
    const ReynoldsContext ctx = d.ctx();
    const TensorAdmissibility ta = check_tensor_admissibility(ctx, s, r);
    const Tensor3 delta = coboundary_coproduct(d.alg, r);
    record(res, ta.coalgebra_side == !check_reynolds_coalgebra(delta, d.lam, s),
           "coalgebra-side equivalence fails");
    record(res, ta.mixed_first == !check_bundle_tensor_first(delta, d.lam, d.op, s),
           "first mixed-condition equivalence fails");
    record(res, ta.mixed_second == !check_bundle_tensor_second(delta, d.lam, d.op, s),
           "second mixed-condition equivalence fails");
    res.positives += ta.all();
  }
  return res;
}

SweepResult sweep_sharp_characterization(std::uint64_t seed, std::size_t count,
                                         bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  for (std::size_t t = 0; t < count; ++t) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const ReynoldsContext ctx = d.ctx();
    Matrix r = random_symmetric(rng, kF5, 2);
    Matrix s = Matrix::random(rng, kF5, 2, 2);
    if (rng.coin() && !r.det().is_zero()) s = r * d.op.transpose() * r.inverse();
    ++res.fixtures;
    const bool solves = check_admissible_clybe(ctx, s, r).all();
    const Representation dual = dual_representation(adjoint_representation(d.alg));
    const bool weak =
        check_o_operator(r_sharp(r), dual, ctx, s.transpose()) != OOperatorLevel::None;
    record(res, solves == weak, "sharp characterization fails");
    res.positives += solves;
  }
  return res;
}

SweepResult sweep_lift_equivalence(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const ReynoldsContext ctx = d.ctx();
    const bool tailored = rng.coin();
    const Representation rep =
        tailored
            ? Representation::create(
                  d.alg, 2, {d.alg.left_mult(std::size_t(0)), d.alg.left_mult(std::size_t(1))},
                  {Matrix::zero(kF5, 2, 2), Matrix::zero(kF5, 2, 2)})
            : adjoint_representation(d.alg);
    const Matrix beta = Matrix::random(rng, kF5, 2, 2);
    if (check_beta_admissible(rep, ctx, beta)) continue;
    ++res.fixtures;
    const Matrix o_map = tailored ? Matrix::identity(kF5, 2) : Matrix::random(rng, kF5, 2, 2);
    const Matrix alpha = tailored ? d.op : Matrix::random(rng, kF5, 2, 2);
    const Matrix co_op = tailored ? beta : Matrix::random(rng, kF5, 2, 2);
    const OOperatorLift lift = lift_o_operator(o_map, rep, ctx, alpha, beta, co_op);
    const bool lifted =
        check_admissible_clybe(lift.double_ctx, lift.co_op_lift, lift.r_lift).all();
    const bool weak = check_o_operator(o_map, rep, ctx, alpha) != OOperatorLevel::None;
    const bool intertwined = o_map * beta == co_op * o_map;
    record(res, lifted == (weak && intertwined), "lift biconditional fails");
    res.positives += lifted;
  }
  return res;
}

SweepResult sweep_pi_substitution(std::uint64_t seed, std::size_t count, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  while (res.fixtures < count) {
    const Draw d = draw_reynolds(rng, weight_zero);
    const Representation rep = adjoint_representation(d.alg);
    const Matrix alpha = rng.coin() ? d.op : Matrix::random(rng, kF5, 2, 2);
    PiForm pi = PiForm::plus_x();
    switch (rng.uniform(4)) {
      case 0: break;
      case 1: pi = PiForm::minus_x(); break;
      case 2: pi = PiForm::minus_x_plus(rng.nonzero(kF5)); break;
      default: pi = PiForm::theta_over_x(rng.nonzero(kF5)); break;
    }
    if (pi.kind == PiForm::Kind::ThetaXInverse &&
        (d.op.det().is_zero() || alpha.det().is_zero())) {
      continue;
    }
    ++res.fixtures;
    const ReynoldsContext ctx = d.ctx();
    const bool direct = !check_pi_admissible(ctx, rep, alpha, pi);

    const Representation dual = dual_representation(rep);
    const Matrix beta_t = pi.apply(alpha).transpose();
    const SemidirectProduct sd = semidirect_product(dual, ctx, beta_t);
    bool via_double = false;
    if (!check_reynolds(sd.alg, d.lam, sd.op)) {
      via_double = !check_adjoint_admissible(
          sd.alg, d.lam, sd.op, Matrix::block_diag(pi.apply(d.op), alpha.transpose()));
    }
    record(res, direct == via_double, "pi system differs from the semidirect route");
    res.positives += direct;
  }
  return res;
}

SweepResult sweep_pi_bundles(std::uint64_t seed, bool weight_zero) {
  Sampler rng(seed);
  SweepResult res;
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, kF5);
  const Representation left_only = Representation::create(
      a1, 2, {a1.left_mult(std::size_t(0)), a1.left_mult(std::size_t(1))},
      {Matrix::zero(kF5, 2, 2), Matrix::zero(kF5, 2, 2)});
  const Value lam = weight_zero ? Value::zero(kF5) : Value::of(kF5, 1);

  const auto run_case = [&](const ReynoldsContext& ctx, const PiForm& pi) {
    ++res.fixtures;
    const Matrix alpha = ctx.op();
    if (check_pi_admissible(ctx, left_only, alpha, pi)) {
      record(res, false, "constructed fixture fails the substitution system (" + pi.str() + ")");
      return;
    }
    const Matrix o_map = Matrix::identity(kF5, 2);
    record(res, check_o_operator(o_map, left_only, ctx, alpha) == OOperatorLevel::Full,
           "identity map is not a full relative Rota-Baxter map");
    const OOperatorLift lift =
        lift_o_operator(o_map, left_only, ctx, alpha, pi.apply(alpha), pi.apply(ctx.op()));
    record(res, check_admissible_clybe(lift.double_ctx, lift.co_op_lift, lift.r_lift).all(),
           "lifted tensor misses the admissible equations (" + pi.str() + ")");
    const Tensor3 delta = coboundary_coproduct(lift.double_ctx.alg(), lift.r_lift);
    record(res,
           check_reynolds_bialgebra(lift.double_ctx.alg(), delta, lam, lift.double_ctx.op(),
                                    lift.co_op_lift)
               .ok(),
           "assembled bundle fails (" + pi.str() + ")");
    ++res.positives;
  };

  for (int rep_count = 0; rep_count < 3; ++rep_count) {
    // Flat operators: R e1 = k e1, R e2 = l e1.
    const Value k = rng.nonzero(kF5);
    const Value l = rng.value(kF5);
    Matrix flat(kF5, 2, 2);
    flat.at(0, 0) = k;
    flat.at(0, 1) = l;
    const ReynoldsContext flat_ctx = ReynoldsContext::create(a1, lam, flat);
    run_case(flat_ctx, PiForm::plus_x());
    run_case(flat_ctx, PiForm::minus_x());
    run_case(flat_ctx, PiForm::minus_x_plus(k));

    // Invertible operators for the inverse substitution: diagonal family.
    Matrix diag(kF5, 2, 2);
    diag.at(0, 0) = k;
    diag.at(0, 1) = l;
    const Value den = Value::one(kF5) + lam * k;
    if (den.is_zero()) continue;
    diag.at(1, 1) = Value::of(kF5, 2) * k / den;
    const ReynoldsContext diag_ctx = ReynoldsContext::create(a1, lam, diag);
    run_case(diag_ctx, PiForm::theta_over_x(k * diag.at(1, 1)));
  }
  return res;
}

SweepResult check_coproduct_goldens(std::uint64_t seed, std::size_t assignments) {
  Sampler rng(seed);
  SweepResult res;
  const FieldSpec q = FieldSpec::rationals();
  const LeibnizAlgebra a1 = builtin_algebra(AlgebraId::A1, q);
  const LeibnizAlgebra a2 = builtin_algebra(AlgebraId::A2, q);
  for (std::size_t t = 0; t < assignments; ++t) {
    const Value eta = rng.value(q);
    const Value gamma = rng.nonzero(q);
    ++res.fixtures;
    ++res.positives;
    {
      Tensor3 want(q, 2, 2, 2);
      want.at(1, 0, 0) = gamma;
      record(res, coboundary_coproduct(a1, rcase_matrix(RCase::A1Sym, eta, gamma)) == want,
             "first table mismatch");
    }
    {
      Tensor3 want(q, 2, 2, 2);
      want.at(1, 0, 0) = eta + gamma;
      want.at(1, 0, 1) = gamma;
      record(res, coboundary_coproduct(a2, rcase_matrix(RCase::A2CaseI, eta, gamma)) == want,
             "second table mismatch");
    }
    {
      Tensor3 want(q, 2, 2, 2);
      want.at(0, 0, 1) = eta;
      want.at(0, 1, 0) = -eta;
      want.at(1, 0, 1) = eta;
      want.at(1, 1, 0) = -eta;
      record(res, coboundary_coproduct(a2, rcase_matrix(RCase::A2CaseII, eta, gamma)) == want,
             "third table mismatch");
    }
  }
  return res;
}

namespace {

AnchorResult from_sweep(const std::string& anchor, const SweepResult& sweep) {
  return AnchorResult{anchor, sweep.ok(), sweep.summary()};
}

void run_sec2(std::vector<AnchorResult>& out, std::uint64_t seed) {
  out.push_back(from_sweep("2.2 induced bracket", sweep_induced_bracket(seed, 120, false)));
  out.push_back(from_sweep("2.7 semidirect product", sweep_semidirect(seed + 1, 120, false)));
  out.push_back(from_sweep("2.8 dual representation", sweep_dual_representation(seed + 2, 120)));
  out.push_back(from_sweep("2.9 admissibility duality", sweep_beta_duality(seed + 3, 120, false)));
  {
    // 2.12: the operator transpose is admissible for the dual adjoint module,
    // and the negated operator is adjoint admissible.
    SweepResult res;
    Sampler rng(seed + 4);
    for (int t = 0; t < 60; ++t) {
      const Draw d = draw_reynolds(rng, false);
      const ReynoldsContext ctx = d.ctx();
      ++res.fixtures;
      ++res.positives;
      record(res,
             !check_beta_admissible(dual_representation(adjoint_representation(d.alg)), ctx,
                                    d.op.transpose()),
             "transpose not admissible for the dual adjoint");
      record(res, !check_adjoint_admissible(ctx, -d.op), "negation not adjoint admissible");
      record(res, !check_reynolds_representation(adjoint_representation(d.alg), ctx, d.op),
             "adjoint module with the operator fails");
    }
    out.push_back(from_sweep("2.10/2.12 canonical admissibles", res));
  }
}

void run_sec3(std::vector<AnchorResult>& out, std::uint64_t seed) {
  out.push_back(
      from_sweep("3.19 route equivalence", sweep_equivalence_routes(seed + 10, 200, false)));
  out.push_back(from_sweep("3.10 double adjoint", sweep_double_adjoint(seed + 11, 100, false)));
  out.push_back(from_sweep("3.5 derived invariance", sweep_quadratic_derived(seed + 12, 100)));
  out.push_back(
      from_sweep("3.8 dual quadratic module", sweep_dual_quadratic_rep(seed + 13, 100, false)));
  out.push_back(from_sweep("3.15 negated co-operator",
                           sweep_negated_operator_bundles(seed + 14, 100, false)));
  out.push_back(from_sweep("3.16 weight-zero routes",
                           sweep_equivalence_routes(seed + 15, 100, true)));
}

void run_sec4(std::vector<AnchorResult>& out, std::uint64_t seed) {
  out.push_back(from_sweep("4.1/4.3 triangular construction",
                           sweep_triangular_construction(seed + 20, 100, false)));
  out.push_back(from_sweep("4.4 operator conditions",
                           sweep_tensor_admissibility(seed + 21, 100, false)));
  out.push_back(
      from_sweep("4.5 intertwining mirrors", sweep_intertwine_mirrors(seed + 22, 100)));
  out.push_back(from_sweep("4.11/4.14 sharp characterization",
                           sweep_sharp_characterization(seed + 23, 150, false)));
  out.push_back(
      from_sweep("4.16 lift biconditional", sweep_lift_equivalence(seed + 24, 80, false)));
  out.push_back(
      from_sweep("4.17 substitution systems", sweep_pi_substitution(seed + 25, 120, false)));
  out.push_back(from_sweep("4.19 assembled bundles", sweep_pi_bundles(seed + 26, false)));
  out.push_back(from_sweep("4.18/4.20 weight-zero bundles", sweep_pi_bundles(seed + 27, true)));
  out.push_back(from_sweep("(23) coproduct tables", check_coproduct_goldens(seed + 28, 5)));
}

void run_sec5(std::vector<AnchorResult>& out, std::uint64_t seed) {
  {
    AnchorResult r{"5.1 operator census", true, ""};
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const FieldSpec fp = FieldSpec::prime(p);
      for (long long lam : {0, 1, 2}) {
        const auto a1 = enumerate_reynolds(AlgebraId::A1, p, Value::of(fp, lam));
        const std::size_t expect = lam == 0 ? p * p + p * (p - 1) : p * p + p * (p - 2);
        if (a1.solutions.size() != expect || !a1.unmatched.empty()) r.pass = false;
        const auto a2 = enumerate_reynolds(AlgebraId::A2, p, Value::of(fp, lam));
        if (!a2.unmatched.empty()) r.pass = false;
      }
    }
    r.detail = "grids p in {3,5,7}, weight in {0,1,2}";
    out.push_back(r);
  }
  {
    AnchorResult r{"5.1 pair census", true, ""};
    const FieldSpec f3 = FieldSpec::prime(3);
    std::size_t runs = 0;
    for (long long lam : {0, 1, 2}) {
      const Value lv = Value::of(f3, lam);
      for (long long eta : {0, 1, 2}) {
        const auto rep1 = enumerate_triangular_pairs(RCase::A1Sym, Value::of(f3, eta),
                                                     Value::one(f3), 3, lv);
        if (!rep1.unmatched.empty()) r.pass = false;
        ++runs;
        const auto rep2 = enumerate_triangular_pairs(RCase::A2CaseI, Value::of(f3, eta),
                                                     Value::one(f3), 3, lv);
        if (!rep2.unmatched.empty()) r.pass = false;
        ++runs;
      }
      const auto rep0 = enumerate_triangular_pairs(RCase::A2CaseI, Value::one(f3),
                                                   Value::zero(f3), 3, lv);
      if (!rep0.unmatched.empty()) r.pass = false;
      const auto rep3 =
          enumerate_triangular_pairs(RCase::A2CaseII, Value::one(f3), Value::zero(f3), 3, lv);
      if (!rep3.unmatched.empty()) r.pass = false;
      runs += 2;
    }
    r.detail = std::to_string(runs) + " grid points at p = 3, every solution matched";
    out.push_back(r);
  }
  {
    AnchorResult r{"5.1 family soundness", true, ""};
    std::size_t checked = 0;
    for (const auto& fam : family_registry()) {
      const auto res = verify_family(fam.name, 20, seed + 31);
      if (!res.ok) {
        r.pass = false;
        r.detail = res.counterexample;
      }
      ++checked;
    }
    if (r.pass) r.detail = std::to_string(checked) + " families, 20 rational trials each";
    out.push_back(r);
  }
}

}  // namespace

std::vector<AnchorResult> run_suite(SuiteSection section, std::uint64_t seed) {
  std::vector<AnchorResult> out;
  if (section == SuiteSection::All || section == SuiteSection::Sec2) run_sec2(out, seed);
  if (section == SuiteSection::All || section == SuiteSection::Sec3) run_sec3(out, seed);
  if (section == SuiteSection::All || section == SuiteSection::Sec4) run_sec4(out, seed);
  if (section == SuiteSection::All || section == SuiteSection::Sec5) run_sec5(out, seed);
  return out;
}

}  // namespace rlk
