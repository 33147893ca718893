#include "rlk/classify.hpp"

#include <algorithm>

namespace rlk {

namespace {

Matrix m2(const FieldSpec& spec, const Value& a, const Value& b, const Value& c, const Value& d) {
  Matrix m(spec, 2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

Value c0(const FieldSpec& spec) { return Value::zero(spec); }

using Regime = RParamRegime;

bool regime_ok(Regime reg, const FamilyParams& prm) {
  const Value& eta = prm.eta;
  const Value& gamma = prm.gamma;
  const Value two = Value::of(eta.spec(), 2);
  switch (reg) {
    case Regime::None: return true;
    case Regime::GammaNonzero: return !gamma.is_zero();
    case Regime::GammaZeroEtaNonzero: return gamma.is_zero() && !eta.is_zero();
    case Regime::EtaMinus2Gamma: return !gamma.is_zero() && eta == -(two * gamma);
    case Regime::DeltaNonzero: return !(gamma.is_zero() && eta.is_zero());
    case Regime::EtaNonzero: return !eta.is_zero();
  }
  return false;
}

bool lambda_ok(LambdaPolicy pol, const Value& lambda) {
  switch (pol) {
    case LambdaPolicy::Any: return true;
    case LambdaPolicy::Zero: return lambda.is_zero();
    case LambdaPolicy::NonZero: return !lambda.is_zero();
  }
  return false;
}

struct FamilySpec {
  std::string name;
  AlgebraId alg;
  std::optional<RCase> rcase;
  bool derived;
  LambdaPolicy lambda;
  Regime regime;
  std::vector<std::string> slots;
  std::string constraints;
  // Produces (R, S) from slot values; nullopt when a denominator vanishes or a
  // tie among slots fails. Lambda policy and regime are checked by the caller.
  std::function<std::optional<FamilyInstance>(const FamilyParams&, const SlotValues&)> build;
  // Reads the slot values off a candidate's designated entries.
  std::function<SlotValues(const Matrix& op, const Matrix* co_op)> read;
};

FamilyDescriptor finish(FamilySpec fs) {
  FamilyDescriptor d;
  d.name = fs.name;
  d.alg = fs.alg;
  d.rcase = fs.rcase;
  d.derived = fs.derived;
  d.lambda = fs.lambda;
  d.regime = fs.regime;
  d.slots = fs.slots;
  d.constraints = fs.constraints;
  const auto build = fs.build;
  const auto read = fs.read;
  const LambdaPolicy pol = fs.lambda;
  const Regime reg = fs.regime;
  d.instantiate = [build, pol, reg](const FamilyParams& prm,
                                    const SlotValues& sv) -> std::optional<FamilyInstance> {
    if (!lambda_ok(pol, prm.lambda) || !regime_ok(reg, prm)) return std::nullopt;
    return build(prm, sv);
  };
  const auto instantiate = d.instantiate;
  d.match = [read, instantiate](const FamilyParams& prm, const Matrix& op,
                                const Matrix* co_op) -> std::optional<SlotValues> {
    SlotValues sv = read(op, co_op);
    auto inst = instantiate(prm, sv);
    if (!inst) return std::nullopt;
    if (!(inst->op == op)) return std::nullopt;
    if (inst->co_op.has_value() != (co_op != nullptr)) return std::nullopt;
    if (co_op && !(*inst->co_op == *co_op)) return std::nullopt;
    return sv;
  };
  return d;
}

std::vector<FamilyDescriptor> build_registry() {
  std::vector<FamilyDescriptor> reg;
  const auto spec_of = [](const FamilyParams& prm) { return prm.lambda.spec(); };

  // ---- Operator families on A1 ----
  reg.push_back(finish({"5.1(1)-R1", AlgebraId::A1, std::nullopt, false, LambdaPolicy::Any,
                        Regime::None, {"k1", "l1"}, "none",
                        [spec_of](const FamilyParams& prm, const SlotValues& sv)
                            -> std::optional<FamilyInstance> {
                          const FieldSpec fs = spec_of(prm);
                          return FamilyInstance{
                              m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), c0(fs)), std::nullopt};
                        },
                        [](const Matrix& op, const Matrix*) {
                          return SlotValues{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
                        }}));
  reg.push_back(finish(
      {"5.1(1)-R2", AlgebraId::A1, std::nullopt, false, LambdaPolicy::NonZero, Regime::None,
       {"k1", "l1"}, "lambda != 0, 1 + lambda k1 != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value den = Value::one(fs) + prm.lambda * sv.at("k1");
         if (den.is_zero()) return std::nullopt;
         const Value diag = Value::of(fs, 2) * sv.at("k1") / den;
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), diag), std::nullopt};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish({"5.1(1)-R3", AlgebraId::A1, std::nullopt, false, LambdaPolicy::Zero,
                        Regime::None, {"k1", "l1"}, "lambda = 0",
                        [spec_of](const FamilyParams& prm, const SlotValues& sv)
                            -> std::optional<FamilyInstance> {
                          const FieldSpec fs = spec_of(prm);
                          return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs),
                                                   Value::of(fs, 2) * sv.at("k1")),
                                                std::nullopt};
                        },
                        [](const Matrix& op, const Matrix*) {
                          return SlotValues{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
                        }}));

  // ---- Operator families on A2 ----
  reg.push_back(finish({"5.1(2)-R1", AlgebraId::A2, std::nullopt, false, LambdaPolicy::Any,
                        Regime::None, {"l1"}, "none",
                        [spec_of](const FamilyParams& prm, const SlotValues& sv)
                            -> std::optional<FamilyInstance> {
                          const FieldSpec fs = spec_of(prm);
                          return FamilyInstance{
                              m2(fs, c0(fs), sv.at("l1"), c0(fs), -sv.at("l1")), std::nullopt};
                        },
                        [](const Matrix& op, const Matrix*) {
                          return SlotValues{{"l1", op.at(0, 1)}};
                        }}));
  reg.push_back(finish({"5.1(2)-R2", AlgebraId::A2, std::nullopt, false, LambdaPolicy::Any,
                        Regime::None, {"l1"}, "none",
                        [spec_of](const FamilyParams& prm, const SlotValues& sv)
                            -> std::optional<FamilyInstance> {
                          const FieldSpec fs = spec_of(prm);
                          return FamilyInstance{
                              m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs)), std::nullopt};
                        },
                        [](const Matrix& op, const Matrix*) {
                          return SlotValues{{"l1", op.at(0, 1)}};
                        }}));
  reg.push_back(finish(
      {"5.1(2)-R3", AlgebraId::A2, std::nullopt, false, LambdaPolicy::NonZero, Regime::None,
       {"k1"}, "lambda != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("k1") - inv, c0(fs), inv), std::nullopt};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}};
       }}));

  // ---- Pair families on A1 (r = eta e1xe1 + gamma(e1xe2 + e2xe1), gamma != 0) ----
  reg.push_back(finish(
      {"5.1(1)-a", AlgebraId::A1, RCase::A1Sym, false, LambdaPolicy::Any, Regime::GammaNonzero,
       {"k1", "l1"}, "gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value t = sv.at("l1") + sv.at("k1") * prm.eta / prm.gamma;
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), c0(fs)),
                               m2(fs, c0(fs), t, c0(fs), sv.at("k1"))};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish(
      {"5.1(1)-b", AlgebraId::A1, RCase::A1Sym, false, LambdaPolicy::Any, Regime::GammaNonzero,
       {"l1"}, "gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Matrix m = m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs));
         return FamilyInstance{m, m};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish(
      {"5.1(1)-c", AlgebraId::A1, RCase::A1Sym, false, LambdaPolicy::Zero, Regime::GammaNonzero,
       {"k1", "l1"}, "lambda = 0, gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value two_k = Value::of(fs, 2) * sv.at("k1");
         const Value t = sv.at("l1") - sv.at("k1") * prm.eta / prm.gamma;
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), two_k),
                               m2(fs, two_k, t, c0(fs), sv.at("k1"))};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish(
      {"5.1(1)-x1", AlgebraId::A1, RCase::A1Sym, true, LambdaPolicy::Any, Regime::GammaNonzero,
       {"k1", "l1", "n1", "n2"}, "gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), c0(fs)),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), sv.at("n2"))};
       },
       [](const Matrix& op, const Matrix* co) {
         SlotValues sv{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
         if (co) {
           sv.emplace("n1", co->at(0, 1));
           sv.emplace("n2", co->at(1, 1));
         }
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(1)-x2", AlgebraId::A1, RCase::A1Sym, true, LambdaPolicy::Any, Regime::GammaNonzero,
       {"k1", "l1", "n1"}, "gamma != 0, 1 + lambda k1 != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value den = Value::one(fs) + prm.lambda * sv.at("k1");
         if (den.is_zero()) return std::nullopt;
         const Value diag = Value::of(fs, 2) * sv.at("k1") / den;
         return FamilyInstance{m2(fs, sv.at("k1"), sv.at("l1"), c0(fs), diag),
                               m2(fs, diag, sv.at("n1"), c0(fs), sv.at("k1"))};
       },
       [](const Matrix& op, const Matrix* co) {
         SlotValues sv{{"k1", op.at(0, 0)}, {"l1", op.at(0, 1)}};
         if (co) sv.emplace("n1", co->at(0, 1));
         return sv;
       }}));

  // ---- Pair families on A2, case I (r = eta e1xe1 + gamma(e1xe2 + e2xe1)) ----
  const auto a2r3 = [spec_of](const FamilyParams& prm, const Value& k1) {
    const FieldSpec fs = spec_of(prm);
    const Value inv = prm.lambda.inv();
    return m2(fs, k1, k1 - inv, c0(fs), inv);
  };
  reg.push_back(finish(
      {"5.1(2)(I)-a", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::Any,
       Regime::GammaZeroEtaNonzero, {"n1", "n2"}, "gamma = 0, eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{Matrix::zero(fs, 2, 2),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), sv.at("n2"))};
       },
       [](const Matrix&, const Matrix* co) {
         SlotValues sv;
         if (co) {
           sv.emplace("n1", co->at(0, 1));
           sv.emplace("n2", co->at(1, 1));
         }
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(I)-b", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::Any,
       Regime::GammaZeroEtaNonzero, {"l1", "n1"}, "gamma = 0, eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{m2(fs, c0(fs), sv.at("l1"), c0(fs), -sv.at("l1")),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), -sv.at("n1"))};
       },
       [](const Matrix& op, const Matrix* co) {
         SlotValues sv{{"l1", op.at(0, 1)}};
         if (co) sv.emplace("n1", co->at(0, 1));
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(I)-c", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::NonZero,
       Regime::EtaMinus2Gamma, {}, "lambda != 0, eta = -2 gamma, gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues&) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         return FamilyInstance{m2(fs, c0(fs), -inv, c0(fs), inv),
                               m2(fs, inv, inv, c0(fs), c0(fs))};
       },
       [](const Matrix&, const Matrix*) { return SlotValues{}; }}));
  reg.push_back(finish(
      {"5.1(2)(I)-d", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::Any,
       Regime::DeltaNonzero, {"l1", "n1"}, "coproduct nonzero",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs)),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), c0(fs))};
       },
       [](const Matrix& op, const Matrix* co) {
         SlotValues sv{{"l1", op.at(0, 1)}};
         if (co) sv.emplace("n1", co->at(0, 1));
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(I)-e", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::Any,
       Regime::DeltaNonzero, {"l1"}, "coproduct nonzero",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Matrix m = m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs));
         return FamilyInstance{m, m};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"l1", op.at(0, 1)}};
       }}));
  {
    FamilyDescriptor f = finish(
        {"5.1(2)(I)-f", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::Any,
         Regime::GammaZeroEtaNonzero, {"l1", "n1", "n2"}, "gamma = 0, eta != 0, l1 n2 = 0",
         [spec_of](const FamilyParams& prm,
                   const SlotValues& sv) -> std::optional<FamilyInstance> {
           const FieldSpec fs = spec_of(prm);
           if (!(sv.at("l1") * sv.at("n2")).is_zero()) return std::nullopt;
           return FamilyInstance{m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs)),
                                 m2(fs, c0(fs), sv.at("n1"), c0(fs), sv.at("n2"))};
         },
         [](const Matrix& op, const Matrix* co) {
           SlotValues sv{{"l1", op.at(0, 1)}};
           if (co) {
             sv.emplace("n1", co->at(0, 1));
             sv.emplace("n2", co->at(1, 1));
           }
           return sv;
         }});
    f.adjust_slots = [](Sampler& rng, const FieldSpec& fs, SlotValues& sv) {
      sv.at(rng.coin() ? "l1" : "n2") = Value::zero(fs);
    };
    reg.push_back(std::move(f));
  }
  reg.push_back(finish(
      {"5.1(2)(I)-g", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::NonZero,
       Regime::GammaZeroEtaNonzero, {"n2"},
       "lambda != 0, 1 + lambda n2 != 0, gamma = 0, eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value den = Value::one(fs) + prm.lambda * sv.at("n2");
         if (den.is_zero()) return std::nullopt;
         const Value a = Value::of(fs, 2) * sv.at("n2") / den;
         const Value inv = prm.lambda.inv();
         return FamilyInstance{m2(fs, a, a - inv, c0(fs), inv),
                               m2(fs, a, a - sv.at("n2"), c0(fs), sv.at("n2"))};
       },
       [](const Matrix&, const Matrix* co) {
         SlotValues sv;
         if (co) sv.emplace("n2", co->at(1, 1));
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(I)-h", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::NonZero,
       Regime::EtaMinus2Gamma, {}, "lambda != 0, eta = -2 gamma, gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues&) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         const Value two = Value::of(fs, 2);
         return FamilyInstance{m2(fs, two * inv, inv, c0(fs), inv),
                               m2(fs, inv, -inv, c0(fs), two * inv)};
       },
       [](const Matrix&, const Matrix*) { return SlotValues{}; }}));
  reg.push_back(finish(
      {"5.1(2)(I)-i", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::NonZero,
       Regime::GammaZeroEtaNonzero, {}, "lambda != 0, gamma = 0, eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues&) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         return FamilyInstance{m2(fs, c0(fs), -inv, c0(fs), inv), Matrix::zero(fs, 2, 2)};
       },
       [](const Matrix&, const Matrix*) { return SlotValues{}; }}));
  reg.push_back(finish(
      {"5.1(2)(I)-j", AlgebraId::A2, RCase::A2CaseI, false, LambdaPolicy::NonZero,
       Regime::EtaMinus2Gamma, {}, "lambda != 0, eta = -2 gamma, gamma != 0",
       [spec_of](const FamilyParams& prm, const SlotValues&) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         return FamilyInstance{m2(fs, c0(fs), -inv, c0(fs), inv),
                               m2(fs, inv, inv, c0(fs), c0(fs))};
       },
       [](const Matrix&, const Matrix*) { return SlotValues{}; }}));
  reg.push_back(finish(
      {"5.1(2)(I)-x2", AlgebraId::A2, RCase::A2CaseI, true, LambdaPolicy::NonZero,
       Regime::DeltaNonzero, {}, "lambda != 0",
       [spec_of](const FamilyParams& prm, const SlotValues&) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         const Matrix m = m2(fs, inv, c0(fs), c0(fs), inv);
         return FamilyInstance{m, m};
       },
       [](const Matrix&, const Matrix*) { return SlotValues{}; }}));
  reg.push_back(finish(
      {"5.1(2)(I)-x3", AlgebraId::A2, RCase::A2CaseI, true, LambdaPolicy::NonZero,
       Regime::EtaMinus2Gamma, {"k1"}, "lambda != 0, eta = -2 gamma, gamma != 0",
       [spec_of, a2r3](const FamilyParams& prm,
                       const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value inv = prm.lambda.inv();
         return FamilyInstance{a2r3(prm, sv.at("k1")),
                               m2(fs, inv, inv - sv.at("k1"), c0(fs), sv.at("k1"))};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}};
       }}));

  // ---- Pair families on A2, case II (r = eta(e1-e2)x(e1-e2), eta != 0) ----
  reg.push_back(finish(
      {"5.1(2)(II)-a", AlgebraId::A2, RCase::A2CaseII, false, LambdaPolicy::Any,
       Regime::EtaNonzero, {"l1"}, "eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Matrix m = m2(fs, c0(fs), sv.at("l1"), c0(fs), -sv.at("l1"));
         return FamilyInstance{m, m};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish(
      {"5.1(2)(II)-x1", AlgebraId::A2, RCase::A2CaseII, true, LambdaPolicy::Any,
       Regime::EtaNonzero, {"l1"}, "eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{m2(fs, c0(fs), sv.at("l1"), c0(fs), c0(fs)),
                               m2(fs, c0(fs), -sv.at("l1"), c0(fs), c0(fs))};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"l1", op.at(0, 1)}};
       }}));
  reg.push_back(finish(
      {"5.1(2)(II)-x2", AlgebraId::A2, RCase::A2CaseII, true, LambdaPolicy::Any,
       Regime::EtaNonzero, {"l1", "n1"}, "eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{m2(fs, c0(fs), sv.at("l1"), c0(fs), -sv.at("l1")),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), -sv.at("n1"))};
       },
       [](const Matrix& op, const Matrix* co) {
         SlotValues sv{{"l1", op.at(0, 1)}};
         if (co) sv.emplace("n1", co->at(0, 1));
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(II)-x3", AlgebraId::A2, RCase::A2CaseII, true, LambdaPolicy::Any,
       Regime::EtaNonzero, {"n1"}, "eta != 0",
       [spec_of](const FamilyParams& prm, const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         return FamilyInstance{Matrix::zero(fs, 2, 2),
                               m2(fs, c0(fs), sv.at("n1"), c0(fs), c0(fs))};
       },
       [](const Matrix&, const Matrix* co) {
         SlotValues sv;
         if (co) sv.emplace("n1", co->at(0, 1));
         return sv;
       }}));
  reg.push_back(finish(
      {"5.1(2)(II)-x4", AlgebraId::A2, RCase::A2CaseII, true, LambdaPolicy::NonZero,
       Regime::EtaNonzero, {"k1"}, "lambda != 0, 2 lambda k1 != 1",
       [spec_of, a2r3](const FamilyParams& prm,
                       const SlotValues& sv) -> std::optional<FamilyInstance> {
         const FieldSpec fs = spec_of(prm);
         const Value den = Value::of(fs, 2) * prm.lambda * sv.at("k1") - Value::one(fs);
         if (den.is_zero()) return std::nullopt;
         const Value s = sv.at("k1") / den;
         const Value inv = prm.lambda.inv();
         return FamilyInstance{a2r3(prm, sv.at("k1")), m2(fs, s, s - inv, c0(fs), inv)};
       },
       [](const Matrix& op, const Matrix*) {
         return SlotValues{{"k1", op.at(0, 0)}};
       }}));

  return reg;
}

}  // namespace

std::string algebra_name(AlgebraId id) { return id == AlgebraId::A1 ? "a1" : "a2"; }

std::optional<AlgebraId> algebra_from_name(const std::string& name) {
  if (name == "a1" || name == "A1") return AlgebraId::A1;
  if (name == "a2" || name == "A2") return AlgebraId::A2;
  return std::nullopt;
}

LeibnizAlgebra builtin_algebra(AlgebraId id, const FieldSpec& spec) {
  Tensor3 c(spec, 2, 2, 2);
  c.at(1, 1, 0) = Value::one(spec);
  if (id == AlgebraId::A2) c.at(1, 0, 0) = Value::one(spec);
  return LeibnizAlgebra::create(spec, std::move(c));
}

std::string rcase_name(RCase rc) {
  switch (rc) {
    case RCase::A1Sym: return "a1";
    case RCase::A2CaseI: return "a2-I";
    default: return "a2-II";
  }
}

std::optional<RCase> rcase_from_name(const std::string& name) {
  if (name == "a1" || name == "1") return RCase::A1Sym;
  if (name == "a2-I" || name == "2I" || name == "I") return RCase::A2CaseI;
  if (name == "a2-II" || name == "2II" || name == "II") return RCase::A2CaseII;
  return std::nullopt;
}

AlgebraId rcase_algebra(RCase rc) {
  return rc == RCase::A1Sym ? AlgebraId::A1 : AlgebraId::A2;
}

Matrix rcase_matrix(RCase rc, const Value& eta, const Value& gamma) {
  const FieldSpec& fs = eta.spec();
  if (rc == RCase::A2CaseII) {
    return m2(fs, eta, -eta, -eta, eta);
  }
  return m2(fs, eta, gamma, gamma, Value::zero(fs));
}

bool rcase_coproduct_nonzero(RCase rc, const Value& eta, const Value& gamma) {
  switch (rc) {
    case RCase::A1Sym: return !gamma.is_zero();
    case RCase::A2CaseI: return !(gamma.is_zero() && eta.is_zero());
    default: return !eta.is_zero();
  }
}

const std::vector<FamilyDescriptor>& family_registry() {
  static const std::vector<FamilyDescriptor> reg = build_registry();
  return reg;
}

const FamilyDescriptor* find_family(const std::string& name) {
  for (const FamilyDescriptor& f : family_registry()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::vector<const FamilyDescriptor*> families_for(AlgebraId id, std::optional<RCase> rcase) {
  std::vector<const FamilyDescriptor*> out;
  for (const FamilyDescriptor& f : family_registry()) {
    if (f.alg == id && f.rcase == rcase) out.push_back(&f);
  }
  return out;
}

namespace {

template <typename Fn>
void scan_2x2(const FieldSpec& spec, Fn&& fn) {
  Matrix m(spec, 2, 2);
  for (std::uint64_t a = 0; a < spec.p; ++a) {
    m.at(0, 0) = Value::residue(spec, a);
    for (std::uint64_t b = 0; b < spec.p; ++b) {
      m.at(0, 1) = Value::residue(spec, b);
      for (std::uint64_t c = 0; c < spec.p; ++c) {
        m.at(1, 0) = Value::residue(spec, c);
        for (std::uint64_t d = 0; d < spec.p; ++d) {
          m.at(1, 1) = Value::residue(spec, d);
          fn(m);
        }
      }
    }
  }
}

void match_and_count(EnumerationReport& report, std::optional<RCase> rcase,
                     const FamilyParams& prm) {
  const auto families = families_for(report.alg, rcase);
  std::map<std::string, std::size_t> counts;
  for (const auto* f : families) counts[f->name] = 0;
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    FoundSolution& sol = report.solutions[i];
    for (const auto* f : families) {
      const Matrix* co = sol.co_op ? &*sol.co_op : nullptr;
      if (f->match(prm, sol.op, co)) {
        sol.matched.push_back(f->name);
        ++counts[f->name];
      }
    }
    if (sol.matched.empty()) report.unmatched.push_back(i);
  }
  report.family_counts.assign(counts.begin(), counts.end());
}

}  // namespace

EnumerationReport enumerate_reynolds(AlgebraId id, std::uint32_t p, const Value& lambda) {
  const FieldSpec spec = FieldSpec::prime(p);
  if (lambda.spec() != spec) throw FieldMismatch("lambda must live in F_p");
  const LeibnizAlgebra alg = builtin_algebra(id, spec);

  EnumerationReport report;
  report.alg = id;
  report.p = p;
  report.lambda = lambda;
  scan_2x2(spec, [&](const Matrix& m) {
    ++report.scanned;
    if (!check_reynolds(alg, lambda, m)) {
      report.solutions.push_back(FoundSolution{m, std::nullopt, {}, false});
    }
  });
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const FoundSolution& a, const FoundSolution& b) {
              return Matrix::cmp(a.op, b.op) < 0;
            });
  const FamilyParams prm{lambda, Value::zero(spec), Value::zero(spec)};
  match_and_count(report, std::nullopt, prm);
  return report;
}

EnumerationReport enumerate_triangular_pairs(RCase rcase, const Value& eta, const Value& gamma,
                                             std::uint32_t p, const Value& lambda) {
  const FieldSpec spec = FieldSpec::prime(p);
  if (lambda.spec() != spec || eta.spec() != spec || gamma.spec() != spec) {
    throw FieldMismatch("parameters must live in F_p");
  }
  if (!rcase_coproduct_nonzero(rcase, eta, gamma)) {
    throw PreconditionFailed("induced coproduct vanishes for these r parameters");
  }
  const AlgebraId id = rcase_algebra(rcase);
  const LeibnizAlgebra alg = builtin_algebra(id, spec);
  const Matrix r = rcase_matrix(rcase, eta, gamma);
  const Tensor3 delta = coboundary_coproduct(alg, r);

  EnumerationReport report;
  report.alg = id;
  report.p = p;
  report.lambda = lambda;
  report.rcase = rcase;
  report.eta = eta;
  report.gamma = gamma;

  // The coalgebra axioms depend only on delta; evaluate them once.
  const bool delta_ok = !check_coleibniz(delta) && !check_leibniz_bialgebra(alg, delta);

  std::vector<Matrix> reynolds_ops;
  scan_2x2(spec, [&](const Matrix& m) {
    ++report.scanned;
    if (!check_reynolds(alg, lambda, m)) reynolds_ops.push_back(m);
  });

  if (delta_ok) {
    for (const Matrix& rop : reynolds_ops) {
      scan_2x2(spec, [&](const Matrix& s) {
        ++report.scanned;
        if (check_reynolds_coalgebra(delta, lambda, s)) return;
        if (check_adjoint_admissible(alg, lambda, rop, s)) return;
        if (check_bundle_tensor_conditions(delta, lambda, rop, s)) return;
        const AdmissibleClybe adm = check_admissible_clybe(alg, lambda, rop, s, r);
        report.solutions.push_back(FoundSolution{rop, s, {}, adm.all()});
      });
    }
  }
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const FoundSolution& a, const FoundSolution& b) {
              const int c = Matrix::cmp(a.op, b.op);
              if (c != 0) return c < 0;
              return Matrix::cmp(*a.co_op, *b.co_op) < 0;
            });
  const FamilyParams prm{lambda, eta, gamma};
  match_and_count(report, rcase, prm);
  return report;
}

VerifyFamilyResult verify_family(const std::string& name, std::size_t trials,
                                 std::uint64_t seed) {
  const FamilyDescriptor* fam = find_family(name);
  if (!fam) throw InvalidStructure("unknown family '" + name + "'");
  const FieldSpec spec = FieldSpec::rationals();
  Sampler sampler(seed);

  VerifyFamilyResult result;
  for (std::size_t t = 0; t < trials; ++t) {
    FamilyParams prm{Value::zero(spec), Value::zero(spec), Value::zero(spec)};
    std::optional<FamilyInstance> inst;
    SlotValues sv;
    for (int attempt = 0; attempt < 200 && !inst; ++attempt) {
      switch (fam->lambda) {
        case LambdaPolicy::Any: prm.lambda = sampler.value(spec); break;
        case LambdaPolicy::Zero: prm.lambda = Value::zero(spec); break;
        case LambdaPolicy::NonZero: prm.lambda = sampler.nonzero(spec); break;
      }
      // Regime-consistent r parameters; instantiate re-checks them.
      switch (fam->regime) {
        case RParamRegime::None:
        case RParamRegime::DeltaNonzero:
        case RParamRegime::GammaNonzero:
          prm.eta = sampler.value(spec);
          prm.gamma = sampler.nonzero(spec);
          break;
        case RParamRegime::GammaZeroEtaNonzero:
          prm.eta = sampler.nonzero(spec);
          prm.gamma = Value::zero(spec);
          break;
        case RParamRegime::EtaMinus2Gamma:
          prm.gamma = sampler.nonzero(spec);
          prm.eta = -(Value::of(spec, 2) * prm.gamma);
          break;
        case RParamRegime::EtaNonzero:
          prm.eta = sampler.nonzero(spec);
          prm.gamma = Value::zero(spec);
          break;
      }
      sv.clear();
      for (const std::string& slot : fam->slots) sv.emplace(slot, sampler.value(spec));
      if (fam->adjust_slots) fam->adjust_slots(sampler, spec, sv);
      inst = fam->instantiate(prm, sv);
    }
    if (!inst) {
      result.ok = false;
      result.counterexample = "could not draw admissible parameters for " + name;
      return result;
    }
    ++result.trials;

    const LeibnizAlgebra alg = builtin_algebra(fam->alg, spec);
    if (!fam->is_pair()) {
      if (auto w = check_reynolds(alg, prm.lambda, inst->op)) {
        result.ok = false;
        result.counterexample = name + ": " + w->str();
        return result;
      }
    } else {
      const Matrix r = rcase_matrix(*fam->rcase, prm.eta, prm.gamma);
      const Tensor3 delta = coboundary_coproduct(alg, r);
      const BundleReport rep =
          check_reynolds_bialgebra(alg, delta, prm.lambda, inst->op, *inst->co_op);
      if (!rep.ok()) {
        const CheckResult* fails[] = {&rep.bialgebra, &rep.reynolds_alg, &rep.reynolds_coalg,
                                      &rep.adjoint_adm, &rep.tensor_cond};
        std::string what = name + ":";
        for (const CheckResult* f : fails) {
          if (*f) what += " " + (*f)->str();
        }
        result.ok = false;
        result.counterexample = what;
        return result;
      }
    }
  }
  return result;
}

}  // namespace rlk
