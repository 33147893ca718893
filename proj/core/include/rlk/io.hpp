#pragma once

#include <nlohmann/json.hpp>

#include "rlk/classify.hpp"

namespace rlk {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& spec, const Json& j);

/// Algebra file: {"field":..., "dim":n, "brackets":[{"i":..,"j":..,"v":[..]}]},
/// 1-based indices, only rows with a nonzero bracket.
Json algebra_to_json(const FieldSpec& spec, const Tensor3& c);
std::pair<FieldSpec, Tensor3> algebra_from_json(const Json& j);

/// Coproduct file: {"dim":n, "delta":[{"i":..,"terms":[{"j":..,"k":..,"v":".."}]}]}.
Json coproduct_to_json(const Tensor3& d);
Tensor3 coproduct_from_json(const FieldSpec& spec, const Json& j);

/// 2-tensor file: {"dim":n, "r":[[..]]}.
Json rmatrix_to_json(const Matrix& r);
Matrix rmatrix_from_json(const FieldSpec& spec, const Json& j);

struct RepresentationData {
  std::size_t vdim = 0;
  std::vector<Matrix> left, right;
  std::optional<Matrix> module_op;
};

Json representation_to_json(const RepresentationData& rep);
RepresentationData representation_from_json(const FieldSpec& spec, const Json& j);

Json pi_to_json(const PiForm& pi);
PiForm pi_from_json(const FieldSpec& spec, const Json& j);

/// Bundle file: {"algebra":..., "delta":..., "lambda":"..", "R":..., "S":...}.
struct BundleData {
  FieldSpec spec;
  Tensor3 bracket;
  Tensor3 delta;
  Value weight;
  Matrix op;
  Matrix co_op;
};

Json bundle_to_json(const BundleData& bundle);
BundleData bundle_from_json(const Json& j);

Json form_to_json(const BilinearForm& form);
BilinearForm form_from_json(const FieldSpec& spec, const Json& j);

Json witness_to_json(const Witness& w);
Json report_to_json(const EnumerationReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json load_json(const std::string& path);

/// Named objects sharing a single ground field.
class Workspace {
 public:
  const FieldSpec& spec() const;
  bool has_spec() const { return spec_.has_value(); }
  /// Adopts the field on first use; afterwards requires every object to agree.
  void adopt(const FieldSpec& spec);

  void put_algebra(const std::string& id, LeibnizAlgebra alg);
  void put_operator(const std::string& id, Matrix op);
  void put_coproduct(const std::string& id, Tensor3 d);
  void put_representation(const std::string& id, RepresentationData rep);

  const LeibnizAlgebra& algebra(const std::string& id) const;
  const Matrix& op(const std::string& id) const;
  const Tensor3& coproduct(const std::string& id) const;
  const RepresentationData& representation(const std::string& id) const;

 private:
  std::optional<FieldSpec> spec_;
  std::map<std::string, LeibnizAlgebra> algebras_;
  std::map<std::string, Matrix> operators_;
  std::map<std::string, Tensor3> coproducts_;
  std::map<std::string, RepresentationData> representations_;
};

}  // namespace rlk
