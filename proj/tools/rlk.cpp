// rlk: exact computations with weighted Reynolds operators on Leibniz algebras.
//
// Exit codes: 0 success, 1 input/usage error, 2 identity violated,
// 3 classification finding (unmatched solutions).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rlk/io.hpp"
#include "rlk/suite.hpp"

namespace {

using namespace rlk;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;
constexpr int kFinding = 3;

void emit(const Json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

LeibnizAlgebra load_algebra(const std::string& path) {
  auto [spec, raw] = algebra_from_json(load_json(path));
  return LeibnizAlgebra::create(spec, std::move(raw));
}

Value parse_lambda(const FieldSpec& spec, const std::string& text) {
  return Value::parse(spec, text.empty() ? "0" : text);
}

Json check_report(const std::string& kind, const std::vector<std::string>& identities,
                  const CheckResult& w) {
  Json j;
  j["check"] = kind;
  j["identities"] = identities;
  j["ok"] = !w.has_value();
  if (w) j["witness"] = witness_to_json(*w);
  return j;
}

int finish_check(const std::string& kind, const std::vector<std::string>& identities,
                 const CheckResult& w, const std::string& out) {
  emit(check_report(kind, identities, w), out);
  return w ? kViolation : kOk;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("RLK_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return seed;
}

Json bundle_report_json(const BundleReport& rep) {
  Json j;
  j["check"] = "reynolds-bialgebra";
  j["identities"] = {"Def 3.14 (1)-(5)", "(20)", "(21)", "(22)", "(10)", "(11)"};
  j["ok"] = rep.ok();
  Json items;
  const std::pair<const char*, const CheckResult*> fields[] = {
      {"bialgebra", &rep.bialgebra},
      {"reynolds_algebra", &rep.reynolds_alg},
      {"reynolds_coalgebra", &rep.reynolds_coalg},
      {"adjoint_admissible", &rep.adjoint_adm},
      {"tensor_conditions", &rep.tensor_cond}};
  for (const auto& [name, res] : fields) {
    items[name] = !res->has_value();
    if (*res) items[std::string(name) + "_witness"] = witness_to_json(**res);
  }
  j["items"] = std::move(items);
  return j;
}

Json manin_report_json(const ManinReport& rep) {
  Json j;
  j["check"] = "manin";
  j["identities"] = {"(14)", "(16)", "(2)"};
  j["ok"] = rep.ok();
  Json items;
  const std::pair<const char*, const CheckResult*> fields[] = {
      {"dual_leibniz", &rep.dual_leibniz},
      {"double_leibniz", &rep.double_leibniz},
      {"subalgebras", &rep.subalgebras},
      {"invariance", &rep.invariance},
      {"block_reynolds", &rep.block_reynolds}};
  for (const auto& [name, res] : fields) items[name] = !res->has_value();
  j["items"] = std::move(items);
  return j;
}

struct CheckArgs {
  std::string alg, op, co_op, rep, delta, rmat, form, pair, pi, t_map, bundle, lambda, out;
};

int run_check(const std::string& kind, const CheckArgs& a) {
  if (kind == "leibniz") {
    auto [spec, raw] = algebra_from_json(load_json(a.alg));
    return finish_check("leibniz", {"(1)"}, check_leibniz(raw), a.out);
  }

  if (!a.bundle.empty() && (kind == "reynolds-bialgebra" || kind == "manin")) {
    const BundleData b = bundle_from_json(load_json(a.bundle));
    const LeibnizAlgebra balg = LeibnizAlgebra::create(b.spec, b.bracket);
    if (kind == "manin") {
      const ManinReport rep = check_manin_triple(balg, b.delta, b.weight, b.op, b.co_op);
      emit(manin_report_json(rep), a.out);
      return rep.ok() ? kOk : kViolation;
    }
    const BundleReport rep = check_reynolds_bialgebra(balg, b.delta, b.weight, b.op, b.co_op);
    emit(bundle_report_json(rep), a.out);
    return rep.ok() ? kOk : kViolation;
  }

  const LeibnizAlgebra alg = load_algebra(a.alg);
  const FieldSpec& spec = alg.field();
  const Value lam = parse_lambda(spec, a.lambda);

  if (kind == "reynolds") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    return finish_check("reynolds", {"(2)"}, check_reynolds(alg, lam, op), a.out);
  }
  if (kind == "rep") {
    const RepresentationData rep = representation_from_json(spec, load_json(a.rep));
    return finish_check("rep", {"Def 2.3"},
                        check_representation(alg, rep.vdim, rep.left, rep.right), a.out);
  }
  if (kind == "reynolds-rep") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const RepresentationData rep = representation_from_json(spec, load_json(a.rep));
    if (!rep.module_op) throw ParseError("representation file needs alpha");
    CheckResult w = check_representation(alg, rep.vdim, rep.left, rep.right);
    if (!w) w = check_reynolds_module(alg, lam, op, rep.vdim, rep.left, rep.right,
                                      *rep.module_op);
    return finish_check("reynolds-rep", {"(4)", "(5)"}, w, a.out);
  }
  if (kind == "adjoint-admissible") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const Matrix s = matrix_from_json(spec, load_json(a.co_op));
    return finish_check("adjoint-admissible", {"(10)", "(11)"},
                        check_adjoint_admissible(alg, lam, op, s), a.out);
  }
  if (kind == "coleibniz") {
    const Tensor3 d = coproduct_from_json(spec, load_json(a.delta));
    return finish_check("coleibniz", {"co-Leibniz identity"}, check_coleibniz(d), a.out);
  }
  if (kind == "bialgebra") {
    const Tensor3 d = coproduct_from_json(spec, load_json(a.delta));
    CheckResult w = check_coleibniz(d);
    if (!w) w = check_leibniz_bialgebra(alg, d);
    return finish_check("bialgebra", {"co-Leibniz identity", "compatibility"}, w, a.out);
  }
  if (kind == "reynolds-bialgebra") {
    const Tensor3 d = coproduct_from_json(spec, load_json(a.delta));
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const Matrix s = matrix_from_json(spec, load_json(a.co_op));
    const BundleReport rep = check_reynolds_bialgebra(alg, d, lam, op, s);
    emit(bundle_report_json(rep), a.out);
    return rep.ok() ? kOk : kViolation;
  }
  if (kind == "quadratic") {
    const BilinearForm form = form_from_json(spec, load_json(a.form));
    return finish_check("quadratic", {"(14)", "(15)"}, check_quadratic_invariance(alg, form),
                        a.out);
  }
  if (kind == "manin") {
    const Tensor3 d = coproduct_from_json(spec, load_json(a.delta));
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const Matrix s = matrix_from_json(spec, load_json(a.co_op));
    const ManinReport rep = check_manin_triple(alg, d, lam, op, s);
    emit(manin_report_json(rep), a.out);
    return rep.ok() ? kOk : kViolation;
  }
  if (kind == "matched-pair") {
    const Json j = load_json(a.pair);
    auto [spec2, raw2] = algebra_from_json(j.at("alg2"));
    if (spec2 != spec) throw FieldMismatch("matched-pair halves use different fields");
    const LeibnizAlgebra alg2 = LeibnizAlgebra::create(spec2, std::move(raw2));
    const Matrix op1 = matrix_from_json(spec, j.at("R1"));
    const Matrix op2 = matrix_from_json(spec, j.at("R2"));
    MatchedPairActions acts;
    for (const Json& m : j.at("rho1L")) acts.on2_left.push_back(matrix_from_json(spec, m));
    for (const Json& m : j.at("rho1R")) acts.on2_right.push_back(matrix_from_json(spec, m));
    for (const Json& m : j.at("rho2L")) acts.on1_left.push_back(matrix_from_json(spec, m));
    for (const Json& m : j.at("rho2R")) acts.on1_right.push_back(matrix_from_json(spec, m));
    const MatchedPairReport rep = check_matched_pair(alg, alg2, lam, op1, op2, acts);
    Json out;
    out["check"] = "matched-pair";
    out["identities"] = {"(12)", "(13)"};
    out["ok"] = rep.ok();
    out["items"] = Json{{"rep1", !rep.rep1.has_value()},
                        {"rep2", !rep.rep2.has_value()},
                        {"sum_leibniz", !rep.sum_leibniz.has_value()},
                        {"sum_reynolds", !rep.sum_reynolds.has_value()}};
    emit(out, a.out);
    return rep.ok() ? kOk : kViolation;
  }
  if (kind == "clybe") {
    const Matrix r = rmatrix_from_json(spec, load_json(a.rmat));
    const Tensor3 defect = clybe_defect(alg, r);
    Json j;
    j["check"] = "clybe";
    j["identities"] = {"(27)"};
    j["ok"] = defect.is_zero();
    if (!defect.is_zero()) j["defect"] = coproduct_to_json(defect);
    emit(j, a.out);
    return defect.is_zero() ? kOk : kViolation;
  }
  if (kind == "admissible-clybe") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const Matrix s = matrix_from_json(spec, load_json(a.co_op));
    const Matrix r = rmatrix_from_json(spec, load_json(a.rmat));
    const AdmissibleClybe adm = check_admissible_clybe(alg, lam, op, s, r);
    Json j;
    j["check"] = "admissible-clybe";
    j["identities"] = {"(27)", "(31)", "(32)"};
    j["ok"] = adm.all();
    j["items"] =
        Json{{"clybe", adm.clybe}, {"intertwine_sr", adm.eq_sr}, {"intertwine_rs", adm.eq_rs}};
    emit(j, a.out);
    return adm.all() ? kOk : kViolation;
  }
  if (kind == "o-operator") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const RepresentationData rd = representation_from_json(spec, load_json(a.rep));
    if (!rd.module_op) throw ParseError("representation file needs alpha");
    const Representation rep = Representation::create(alg, rd.vdim, rd.left, rd.right);
    const ReynoldsContext ctx = ReynoldsContext::create(alg, lam, op);
    const Matrix t = matrix_from_json(spec, load_json(a.t_map));
    const OOperatorLevel level = check_o_operator(t, rep, ctx, *rd.module_op);
    Json j;
    j["check"] = "o-operator";
    j["identities"] = {"(34)", "(35)"};
    j["level"] = level == OOperatorLevel::Full ? "full"
                 : level == OOperatorLevel::Weak ? "weak"
                                                 : "none";
    j["ok"] = level != OOperatorLevel::None;
    emit(j, a.out);
    return level != OOperatorLevel::None ? kOk : kViolation;
  }
  if (kind == "pi-admissible") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const RepresentationData rd = representation_from_json(spec, load_json(a.rep));
    if (!rd.module_op) throw ParseError("representation file needs alpha");
    const Representation rep = Representation::create(alg, rd.vdim, rd.left, rd.right);
    const ReynoldsContext ctx = ReynoldsContext::create(alg, lam, op);
    const PiForm pi = pi_from_json(spec, load_json(a.pi));
    return finish_check("pi-admissible", {"(4)", "(5)", "(40)-(54)"},
                        check_pi_admissible(ctx, rep, *rd.module_op, pi), a.out);
  }
  throw ParseError("unknown check kind '" + kind + "'");
}

int run_construct(const std::string& kind, const CheckArgs& a) {
  const LeibnizAlgebra alg = load_algebra(a.alg);
  const FieldSpec& spec = alg.field();
  const Value lam = parse_lambda(spec, a.lambda);

  if (kind == "induced") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const ReynoldsContext ctx = ReynoldsContext::create(alg, lam, op);
    emit(algebra_to_json(spec, induced_bracket(ctx).constants()), a.out);
    return kOk;
  }
  if (kind == "dual-rep") {
    const RepresentationData rd = representation_from_json(spec, load_json(a.rep));
    const Representation rep = Representation::create(alg, rd.vdim, rd.left, rd.right);
    const Representation dual = dual_representation(rep);
    RepresentationData out{dual.vdim(), dual.left(), dual.right(), std::nullopt};
    if (rd.module_op) out.module_op = rd.module_op->transpose();
    emit(representation_to_json(out), a.out);
    return kOk;
  }
  if (kind == "semidirect") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const RepresentationData rd = representation_from_json(spec, load_json(a.rep));
    if (!rd.module_op) throw ParseError("representation file needs alpha");
    const Representation rep = Representation::create(alg, rd.vdim, rd.left, rd.right);
    const ReynoldsContext ctx = ReynoldsContext::create(alg, lam, op);
    const SemidirectProduct sd = semidirect_product(rep, ctx, *rd.module_op);
    Json j;
    j["algebra"] = algebra_to_json(spec, sd.alg.constants());
    j["operator"] = matrix_to_json(sd.op);
    emit(j, a.out);
    return kOk;
  }
  if (kind == "double") {
    const Tensor3 d = coproduct_from_json(spec, load_json(a.delta));
    const DoubleData dd = build_double(alg, d);
    Json j;
    j["algebra"] = algebra_to_json(spec, dd.bracket);
    j["form"] = matrix_to_json(dd.form);
    emit(j, a.out);
    return kOk;
  }
  if (kind == "coboundary") {
    const Matrix r = rmatrix_from_json(spec, load_json(a.rmat));
    emit(coproduct_to_json(coboundary_coproduct(alg, r)), a.out);
    return kOk;
  }
  if (kind == "adjoint-op") {
    const BilinearForm form = form_from_json(spec, load_json(a.form));
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    emit(matrix_to_json(adjoint_operator(form, op)), a.out);
    return kOk;
  }
  if (kind == "lift-o-operator") {
    const Matrix op = matrix_from_json(spec, load_json(a.op));
    const RepresentationData rd = representation_from_json(spec, load_json(a.rep));
    if (!rd.module_op) throw ParseError("representation file needs alpha");
    const Representation rep = Representation::create(alg, rd.vdim, rd.left, rd.right);
    const ReynoldsContext ctx = ReynoldsContext::create(alg, lam, op);
    const Matrix t = matrix_from_json(spec, load_json(a.t_map));
    const Matrix beta = matrix_from_json(spec, load_json(a.pair));  // --beta
    const Matrix s = matrix_from_json(spec, load_json(a.co_op));
    const OOperatorLift lift = lift_o_operator(t, rep, ctx, *rd.module_op, beta, s);
    Json j;
    j["algebra"] = algebra_to_json(spec, lift.double_ctx.alg().constants());
    j["operator"] = matrix_to_json(lift.double_ctx.op());
    j["r"] = rmatrix_to_json(lift.r_lift);
    j["s"] = matrix_to_json(lift.co_op_lift);
    emit(j, a.out);
    return kOk;
  }
  throw ParseError("unknown construction kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for weighted Reynolds operators on Leibniz algebras"};
  app.require_subcommand(1);

  CheckArgs args;
  std::string kind, out_path, algebra = "a1", rcase = "I", r_params, suite = "all";
  std::uint32_t p = 3;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_kind) {
    if (with_kind) cmd->add_option("kind", kind)->required();
    cmd->add_option("--alg", args.alg, "algebra file (field carrier)");
    cmd->add_option("--op", args.op, "operator file (R)");
    cmd->add_option("--s", args.co_op, "co-operator file (S)");
    cmd->add_option("--rep", args.rep, "representation file");
    cmd->add_option("--delta", args.delta, "coproduct file");
    cmd->add_option("--r", args.rmat, "2-tensor file");
    cmd->add_option("--form", args.form, "bilinear form file");
    cmd->add_option("--pair", args.pair, "matched-pair composite file / beta operator");
    cmd->add_option("--beta", args.pair, "module operator file (beta)");
    cmd->add_option("--t", args.t_map, "linear map file (T)");
    cmd->add_option("--pi", args.pi, "substitution form file");
    cmd->add_option("--bundle", args.bundle, "composite bundle file");
    cmd->add_option("--lambda", args.lambda, "Reynolds weight (field element)");
    cmd->add_option("--out", args.out, "output file (default stdout)");
  };

  CLI::App* check = app.add_subcommand("check", "verify an identity; exit 2 on violation");
  add_common(check, true);
  CLI::App* construct = app.add_subcommand("construct", "build a derived object");
  add_common(construct, true);
  CLI::App* clybe =
      app.add_subcommand("clybe", "evaluate the Yang-Baxter defect of a 2-tensor");
  add_common(clybe, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "scan all operators over F_p");
  enumerate->add_option("--algebra", algebra, "a1 or a2")->required();
  enumerate->add_option("--p", p, "odd prime")->required();
  enumerate->add_option("--lambda", args.lambda, "weight residue");
  enumerate->add_option("--out", out_path, "output file");

  CLI::App* classify = app.add_subcommand("classify", "scan all operator pairs over F_p");
  classify->add_option("--algebra", algebra, "a1 or a2")->required();
  classify->add_option("--case", rcase, "r-matrix case for a2: I or II");
  classify->add_option("--p", p, "odd prime")->required();
  classify->add_option("--lambda", args.lambda, "weight residue");
  classify->add_option("--r-params", r_params, "eta[,gamma] for the 2-tensor")->required();
  classify->add_option("--out", out_path, "output file");

  CLI::App* verify = app.add_subcommand("paper-verify", "run the verification suite");
  verify->add_option("--suite", suite, "all, sec2, sec3, sec4 or sec5");
  verify->add_option("--seed", seed, "sweep seed (RLK_SEED overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return run_check(kind, args);
    if (construct->parsed()) return run_construct(kind, args);
    if (clybe->parsed()) {
      CheckArgs a = args;
      return run_check("clybe", a);
    }
    if (enumerate->parsed()) {
      const auto id = algebra_from_name(algebra);
      if (!id) throw ParseError("unknown algebra '" + algebra + "'");
      const FieldSpec fp = FieldSpec::prime(p);
      const auto report = enumerate_reynolds(*id, p, parse_lambda(fp, args.lambda));
      emit(report_to_json(report), out_path);
      return report.clean() ? kOk : kFinding;
    }
    if (classify->parsed()) {
      const auto id = algebra_from_name(algebra);
      if (!id) throw ParseError("unknown algebra '" + algebra + "'");
      RCase rc = RCase::A1Sym;
      if (*id == AlgebraId::A2) {
        const auto parsed = rcase_from_name(rcase);
        if (!parsed || *parsed == RCase::A1Sym) {
          throw ParseError("a2 needs --case I or --case II");
        }
        rc = *parsed;
      }
      const FieldSpec fp = FieldSpec::prime(p);
      Value eta = Value::zero(fp), gamma = Value::zero(fp);
      const auto comma = r_params.find(',');
      eta = Value::parse(fp, r_params.substr(0, comma));
      if (comma != std::string::npos) gamma = Value::parse(fp, r_params.substr(comma + 1));
      const auto report =
          enumerate_triangular_pairs(rc, eta, gamma, p, parse_lambda(fp, args.lambda));
      emit(report_to_json(report), out_path);
      return report.clean() ? kOk : kFinding;
    }
    if (verify->parsed()) {
      const auto section = suite_from_name(suite);
      if (!section) throw ParseError("unknown suite '" + suite + "'");
      const auto results = run_suite(*section, effective_seed(seed));
      bool all_pass = true;
      for (const AnchorResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.anchor;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
      }
      std::cout << (all_pass ? "all anchors pass" : "FAILURES present") << "\n";
      return all_pass ? kOk : kViolation;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
