#include "heartbox/json_io.hpp"

#include <fstream>

namespace heartbox {

json field_to_json(const FieldSpec& fs) {
    if (fs.is_fp()) return json{{"kind", "Fp"}, {"p", fs.p}};
    return json{{"kind", "Q"}};
}

FieldSpec field_from_json(const json& j) {
    check(j.is_object() && j.contains("kind"), Errc::BadInput, "field spec must have a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") {
        check(j.contains("p"), Errc::BadInput, "Fp field spec needs p");
        return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    }
    fail(Errc::BadInput, "unknown field kind '" + kind + "'");
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_fp()) return json(s.fp());
    return json(s.to_string());
}

Scalar scalar_from_json(const FieldSpec& fs, const json& j) {
    if (j.is_number_integer()) return Scalar::from_int(fs, j.get<long long>());
    if (j.is_number_unsigned()) return Scalar::from_int(fs, static_cast<long long>(j.get<std::uint64_t>()));
    check(j.is_string(), Errc::BadInput, "scalar must be integer or string");
    return Scalar::parse(fs, j.get<std::string>());
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(scalar_to_json(m.at(i, j)));
    return json{{"field", field_to_json(m.field())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    check(j.is_object(), Errc::BadInput, "matrix must be an object");
    FieldSpec fs = field_from_json(j.at("field"));
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const json& entries = j.at("entries");
    check(entries.is_array() && static_cast<int>(entries.size()) == rows * cols, Errc::BadInput,
          "entries length must be rows*cols");
    Matrix m(fs, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.set(i, c, scalar_from_json(fs, entries[i * cols + c]));
    return m;
}

json algebra_to_json(const Algebra& a) {
    json mul = json::array();
    for (const auto& e : a.mul_entries())
        mul.push_back(json::array({e.i, e.j, e.k, scalar_to_json(e.c)}));
    json unit = json::array();
    for (int i = 0; i < a.dim(); ++i) unit.push_back(scalar_to_json(a.unit().at(i, 0)));
    return json{{"name", a.name()},
                {"field", field_to_json(a.field())},
                {"dim", a.dim()},
                {"basis_labels", a.basis_labels()},
                {"unit", unit},
                {"mul", mul}};
}

AlgebraPtr algebra_from_json(const json& j) {
    check(j.is_object(), Errc::BadInput, "algebra must be an object");
    FieldSpec fs = field_from_json(j.at("field"));
    int dim = j.at("dim").get<int>();
    auto labels = j.at("basis_labels").get<std::vector<std::string>>();
    check(static_cast<int>(labels.size()) == dim, Errc::BadInput, "basis_labels length != dim");
    std::vector<Scalar> unit;
    for (const auto& u : j.at("unit")) unit.push_back(scalar_from_json(fs, u));
    std::vector<Algebra::MulEntry> mul;
    for (const auto& row : j.at("mul")) {
        check(row.is_array() && row.size() == 4, Errc::BadInput, "mul entry must be [i,j,k,coeff]");
        mul.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                       scalar_from_json(fs, row[3])});
    }
    return std::make_shared<Algebra>(j.at("name").get<std::string>(), fs, labels, std::move(mul),
                                     std::move(unit));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), Errc::Io, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail(Errc::BadInput, "json parse error in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    check(out.good(), Errc::Io, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace heartbox
