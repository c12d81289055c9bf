#include "algrad/json_io.hpp"

#include "algrad/errors.hpp"

namespace algrad {

namespace {

Field parse_field_tag(const Json& j) {
    if (!j.is_string()) throw ParseError("\"field\" must be \"R\" or \"C\"");
    auto s = j.get<std::string>();
    if (s == "R") return Field::Real;
    if (s == "C") return Field::Complex;
    throw ParseError("unknown field tag \"" + s + "\"");
}

Scalar scalar_from_json(const Json& j, Field field, Mode mode) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), field, mode);
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), {field, mode});
    throw ParseError("scalar entries must be strings or integers, got " + j.dump());
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

Json matrix_to_json(const MatrixElement& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.n(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return Json{{"n", a.n()}, {"field", std::string(to_string(a.domain().field))}, {"entries", std::move(rows)}};
}

MatrixElement matrix_from_json(const Json& j, Mode mode) {
    if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix JSON needs an \"entries\" array");
    Field field = j.contains("field") ? parse_field_tag(j.at("field")) : Field::Real;
    const Json& rows = j.at("entries");
    if (!rows.is_array() || rows.empty()) throw ParseError("\"entries\" must be a non-empty array of rows");
    const int n = static_cast<int>(rows.size());
    if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<int>() != n))
        throw ShapeError("\"n\" = " + j.at("n").dump() + " disagrees with " + std::to_string(n) + " rows");
    std::vector<Scalar> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ShapeError("every row must have " + std::to_string(n) + " entries");
        for (const auto& x : row) flat.push_back(scalar_from_json(x, field, mode));
    }
    return MatrixElement(n, {field, mode}, std::move(flat));
}

Json element_to_json(const Element& e, Field field) {
    Json coords = Json::array();
    for (const auto& c : e.coords()) coords.push_back(c.to_string());
    return Json{{"field", std::string(to_string(field))}, {"coords", std::move(coords)}};
}

std::vector<Scalar> coords_from_json(const Json& j, Field field, Mode mode) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coords")) throw ParseError("element JSON needs a \"coords\" array");
        if (j.contains("field")) field = parse_field_tag(j.at("field"));
        arr = &j.at("coords");
    }
    if (!arr->is_array()) throw ParseError("\"coords\" must be an array");
    std::vector<Scalar> out;
    for (const auto& x : *arr) out.push_back(scalar_from_json(x, field, mode));
    return out;
}

Json polynomial_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Polynomial polynomial_from_json(const Json& j, Domain d) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of scalars");
    std::vector<Scalar> c;
    for (const auto& x : j) c.push_back(scalar_from_json(x, d.field, d.mode));
    return Polynomial(std::move(c), d);
}

Json radius_report_to_json(const RadiusReport& r) {
    Json roots = Json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        Json z = complex_json(r.roots.roots[i]);
        z["residual"] = r.roots.residuals[i];
        if (r.roots.exact[i]) z["exact"] = r.roots.exact[i]->to_string();
        roots.push_back(std::move(z));
    }
    return Json{{"algebra", r.algebra_name},
                {"minpoly", polynomial_to_json(r.minpoly)},
                {"roots", std::move(roots)},
                {"radius", r.radius},
                {"argmax_root", complex_json(r.argmax_root)},
                {"ill_conditioned", r.ill_conditioned}};
}

Json law_report_to_json(const LawReport& r, Field field) {
    Json witness = Json::array();
    for (const auto& w : r.witness) witness.push_back(element_to_json(w, field)["coords"]);
    Json j{{"law", std::string(to_string(r.law))},
           {"algebra", r.algebra_name},
           {"trials", r.trials},
           {"verdict", std::string(to_string(r.verdict))},
           {"witness", std::move(witness)},
           {"parameter", r.parameter},
           {"max_discrepancy", r.max_discrepancy}};
    if (r.verdict == Verdict::FailsWithWitness) j["witness_discrepancy"] = r.witness_discrepancy;
    if (r.witness_scalar) j["witness_scalar"] = r.witness_scalar->to_string();
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace algrad
