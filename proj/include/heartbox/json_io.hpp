#pragma once

#include "json.hpp"

#include "heartbox/algebra.hpp"
#include "heartbox/exact.hpp"

namespace heartbox {

using json = nlohmann::json;

json field_to_json(const FieldSpec& fs);
FieldSpec field_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& fs, const json& j);

// {"field":..., "rows":r, "cols":c, "entries":[...]} — GF(p) entries are
// integers in [0,p), Q entries are strings "num/den" in lowest terms with
// "/den" omitted when 1.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"name","field","dim","basis_labels","unit","mul":[[i,j,k,coeff],...]}
json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace heartbox
