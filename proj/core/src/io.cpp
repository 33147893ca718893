#include "rlk/io.hpp"

#include <fstream>
#include <sstream>

namespace rlk {

namespace {

Value value_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_string()) throw ParseError("scalar must be a string");
  return Value::parse(spec, j.get<std::string>());
}

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a positive index");
  const std::size_t i = j.get<std::size_t>();
  if (i < 1 || i > dim) throw ParseError(std::string(what) + " out of range");
  return i - 1;
}

}  // namespace

Json field_to_json(const FieldSpec& spec) {
  Json j;
  if (spec.is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = "Fp";
    j["p"] = spec.p;
  }
  return j;
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("missing field spec");
  const std::string kind = j.at("field").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    if (!j.contains("p")) throw ParseError("prime field needs p");
    return FieldSpec::prime(j.at("p").get<std::uint32_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("operator must have rows, cols, entries");
  }
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) throw ParseError("bad entries shape");
  Matrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols) throw ParseError("bad entries shape");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = value_from_json(spec, row[k]);
  }
  return m;
}

Json algebra_to_json(const FieldSpec& spec, const Tensor3& c) {
  Json j = field_to_json(spec);
  Json out;
  out["field"] = j;
  out["dim"] = c.dim0();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < c.dim0(); ++i) {
    for (std::size_t k = 0; k < c.dim1(); ++k) {
      bool nonzero = false;
      for (std::size_t t = 0; t < c.dim2(); ++t) {
        if (!c.at(i, k, t).is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      Json row;
      row["i"] = i + 1;
      row["j"] = k + 1;
      Json v = Json::array();
      for (std::size_t t = 0; t < c.dim2(); ++t) v.push_back(c.at(i, k, t).str());
      row["v"] = std::move(v);
      brackets.push_back(std::move(row));
    }
  }
  out["brackets"] = std::move(brackets);
  return out;
}

std::pair<FieldSpec, Tensor3> algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dim")) {
    throw ParseError("algebra must have field and dim");
  }
  const FieldSpec spec = field_from_json(j.at("field"));
  const std::size_t n = j.at("dim").get<std::size_t>();
  if (n == 0) throw ParseError("dim must be positive");
  Tensor3 c(spec, n, n, n);
  if (j.contains("brackets")) {
    for (const Json& row : j.at("brackets")) {
      const std::size_t i = index_from_json(row.at("i"), n, "bracket index i");
      const std::size_t k = index_from_json(row.at("j"), n, "bracket index j");
      const Json& v = row.at("v");
      if (!v.is_array() || v.size() != n) throw ParseError("bracket row must list dim coefficients");
      for (std::size_t t = 0; t < n; ++t) c.at(i, k, t) = value_from_json(spec, v[t]);
    }
  }
  return {spec, std::move(c)};
}

Json coproduct_to_json(const Tensor3& d) {
  Json out;
  out["dim"] = d.dim0();
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.dim0(); ++i) {
    Json terms = Json::array();
    for (std::size_t j = 0; j < d.dim1(); ++j) {
      for (std::size_t k = 0; k < d.dim2(); ++k) {
        if (d.at(i, j, k).is_zero()) continue;
        Json term;
        term["j"] = j + 1;
        term["k"] = k + 1;
        term["v"] = d.at(i, j, k).str();
        terms.push_back(std::move(term));
      }
    }
    if (terms.empty()) continue;
    Json row;
    row["i"] = i + 1;
    row["terms"] = std::move(terms);
    rows.push_back(std::move(row));
  }
  out["delta"] = std::move(rows);
  return out;
}

Tensor3 coproduct_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("coproduct must have dim");
  const std::size_t n = j.at("dim").get<std::size_t>();
  Tensor3 d(spec, n, n, n);
  if (j.contains("delta")) {
    for (const Json& row : j.at("delta")) {
      const std::size_t i = index_from_json(row.at("i"), n, "coproduct index i");
      for (const Json& term : row.at("terms")) {
        const std::size_t a = index_from_json(term.at("j"), n, "coproduct index j");
        const std::size_t b = index_from_json(term.at("k"), n, "coproduct index k");
        d.at(i, a, b) = value_from_json(spec, term.at("v"));
      }
    }
  }
  return d;
}

Json rmatrix_to_json(const Matrix& r) {
  Json out;
  out["dim"] = r.rows();
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.cols(); ++k) row.push_back(r.at(i, k).str());
    rows.push_back(std::move(row));
  }
  out["r"] = std::move(rows);
  return out;
}

Matrix rmatrix_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("r")) {
    throw ParseError("2-tensor must have dim and r");
  }
  const std::size_t n = j.at("dim").get<std::size_t>();
  const Json& rows = j.at("r");
  if (!rows.is_array() || rows.size() != n) throw ParseError("bad r shape");
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("bad r shape");
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) = value_from_json(spec, rows[i][k]);
  }
  return m;
}

Json representation_to_json(const RepresentationData& rep) {
  Json out;
  out["vdim"] = rep.vdim;
  Json l = Json::array(), r = Json::array();
  for (const Matrix& m : rep.left) l.push_back(matrix_to_json(m));
  for (const Matrix& m : rep.right) r.push_back(matrix_to_json(m));
  out["rhoL"] = std::move(l);
  out["rhoR"] = std::move(r);
  if (rep.module_op) out["alpha"] = matrix_to_json(*rep.module_op);
  return out;
}

RepresentationData representation_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("vdim") || !j.contains("rhoL") || !j.contains("rhoR")) {
    throw ParseError("representation must have vdim, rhoL, rhoR");
  }
  RepresentationData rep;
  rep.vdim = j.at("vdim").get<std::size_t>();
  for (const Json& m : j.at("rhoL")) rep.left.push_back(matrix_from_json(spec, m));
  for (const Json& m : j.at("rhoR")) rep.right.push_back(matrix_from_json(spec, m));
  if (j.contains("alpha")) rep.module_op = matrix_from_json(spec, j.at("alpha"));
  return rep;
}

Json pi_to_json(const PiForm& pi) {
  Json out;
  switch (pi.kind) {
    case PiForm::Kind::PlusX: out["pi"] = "x"; break;
    case PiForm::Kind::MinusX: out["pi"] = "-x"; break;
    case PiForm::Kind::MinusXPlusTheta:
      out["pi"] = "-x+theta";
      out["theta"] = pi.theta.str();
      break;
    case PiForm::Kind::ThetaXInverse:
      out["pi"] = "theta/x";
      out["theta"] = pi.theta.str();
      break;
  }
  return out;
}

PiForm pi_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("pi")) throw ParseError("pi form must name a variant");
  const std::string kind = j.at("pi").get<std::string>();
  if (kind == "x") return PiForm::plus_x();
  if (kind == "-x") return PiForm::minus_x();
  if (!j.contains("theta")) throw ParseError("pi variant needs theta");
  const Value theta = value_from_json(spec, j.at("theta"));
  if (kind == "-x+theta") return PiForm::minus_x_plus(theta);
  if (kind == "theta/x") return PiForm::theta_over_x(theta);
  throw ParseError("unknown pi variant '" + kind + "'");
}

Json bundle_to_json(const BundleData& bundle) {
  Json out;
  out["algebra"] = algebra_to_json(bundle.spec, bundle.bracket);
  out["delta"] = coproduct_to_json(bundle.delta);
  out["lambda"] = bundle.weight.str();
  out["R"] = matrix_to_json(bundle.op);
  out["S"] = matrix_to_json(bundle.co_op);
  return out;
}

BundleData bundle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("delta") ||
      !j.contains("lambda") || !j.contains("R") || !j.contains("S")) {
    throw ParseError("bundle must have algebra, delta, lambda, R, S");
  }
  auto [spec, bracket] = algebra_from_json(j.at("algebra"));
  return BundleData{spec,
                    std::move(bracket),
                    coproduct_from_json(spec, j.at("delta")),
                    value_from_json(spec, j.at("lambda")),
                    matrix_from_json(spec, j.at("R")),
                    matrix_from_json(spec, j.at("S"))};
}

Json form_to_json(const BilinearForm& form) {
  Json out;
  out["dim"] = form.dim();
  out["b"] = matrix_to_json(form.matrix());
  return out;
}

BilinearForm form_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_object() || !j.contains("b")) throw ParseError("form must have b");
  return BilinearForm::create(spec, matrix_from_json(spec, j.at("b")));
}

Json witness_to_json(const Witness& w) {
  Json out;
  out["relation"] = w.relation;
  out["at"] = w.where;
  Json lhs = Json::array(), rhs = Json::array();
  for (std::size_t i = 0; i < w.lhs.size(); ++i) lhs.push_back(w.lhs[i].str());
  for (std::size_t i = 0; i < w.rhs.size(); ++i) rhs.push_back(w.rhs[i].str());
  out["lhs"] = std::move(lhs);
  out["rhs"] = std::move(rhs);
  return out;
}

Json report_to_json(const EnumerationReport& report) {
  Json out;
  out["algebra"] = algebra_name(report.alg);
  out["p"] = report.p;
  out["lambda"] = report.lambda.str();
  if (report.rcase) {
    out["r_case"] = rcase_name(*report.rcase);
    out["eta"] = report.eta->str();
    out["gamma"] = report.gamma->str();
  }
  out["scanned"] = report.scanned;
  out["count"] = report.solutions.size();
  Json sols = Json::array();
  for (const FoundSolution& s : report.solutions) {
    Json row;
    row["R"] = matrix_to_json(s.op);
    if (s.co_op) {
      row["S"] = matrix_to_json(*s.co_op);
      row["strict_triangular"] = s.strict_triangular;
    }
    row["families"] = s.matched;
    sols.push_back(std::move(row));
  }
  out["solutions"] = std::move(sols);
  Json counts;
  for (const auto& [name, count] : report.family_counts) counts[name] = count;
  out["family_counts"] = std::move(counts);
  out["unmatched"] = report.unmatched;
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

const FieldSpec& Workspace::spec() const {
  if (!spec_) throw InvalidStructure("workspace has no field yet");
  return *spec_;
}

void Workspace::adopt(const FieldSpec& spec) {
  if (!spec_) {
    spec_ = spec;
  } else if (*spec_ != spec) {
    throw FieldMismatch("workspace holds " + spec_->str() + ", object uses " + spec.str());
  }
}

void Workspace::put_algebra(const std::string& id, LeibnizAlgebra alg) {
  adopt(alg.field());
  algebras_.insert_or_assign(id, std::move(alg));
}

void Workspace::put_operator(const std::string& id, Matrix op) {
  adopt(op.spec());
  operators_.insert_or_assign(id, std::move(op));
}

void Workspace::put_coproduct(const std::string& id, Tensor3 d) {
  adopt(d.spec());
  coproducts_.insert_or_assign(id, std::move(d));
}

void Workspace::put_representation(const std::string& id, RepresentationData rep) {
  if (!rep.left.empty()) adopt(rep.left.front().spec());
  representations_.insert_or_assign(id, std::move(rep));
}

const LeibnizAlgebra& Workspace::algebra(const std::string& id) const {
  auto it = algebras_.find(id);
  if (it == algebras_.end()) throw InvalidStructure("no algebra '" + id + "'");
  return it->second;
}

const Matrix& Workspace::op(const std::string& id) const {
  auto it = operators_.find(id);
  if (it == operators_.end()) throw InvalidStructure("no operator '" + id + "'");
  return it->second;
}

const Tensor3& Workspace::coproduct(const std::string& id) const {
  auto it = coproducts_.find(id);
  if (it == coproducts_.end()) throw InvalidStructure("no coproduct '" + id + "'");
  return it->second;
}

const RepresentationData& Workspace::representation(const std::string& id) const {
  auto it = representations_.find(id);
  if (it == representations_.end()) throw InvalidStructure("no representation '" + id + "'");
  return it->second;
}

}  // namespace rlk
