#include "mfm/json_io.hpp"

#include <stdexcept>

namespace mfm {

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex value as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const ParameterSet& p) {
    Json j;
    j["m"] = p.m;
    Json a = Json::array();
    for (const Complex& v : p.a) a.push_back(complex_to_json(v));
    Json b = Json::array();
    for (const Complex& v : p.b) b.push_back(complex_to_json(v));
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    return j;
}

ParameterSet parameter_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("a") || !j.contains("b")) {
        throw std::invalid_argument("parameter set requires fields m, a, b");
    }
    if (!j["m"].is_number_integer()) {
        throw std::invalid_argument("parameter set field m must be an integer");
    }
    ParameterSet p;
    p.m = j["m"].get<int>();
    if (!j["a"].is_array() || !j["b"].is_array()) {
        throw std::invalid_argument("parameter set fields a, b must be arrays");
    }
    for (const Json& v : j["a"]) p.a.push_back(complex_from_json(v));
    for (const Json& v : j["b"]) p.b.push_back(complex_from_json(v));
    check_shape(p);
    return p;
}

std::optional<double> x_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x")) {
        return std::nullopt;
    }
    const Json& jx = j["x"];
    if (jx.is_number()) {
        return jx.get<double>();
    }
    const Complex z = complex_from_json(jx);
    if (z.imag() != 0.0) {
        throw std::invalid_argument("parameter field x must be real");
    }
    return z.real();
}

Json to_json(const SeriesValue& sv) {
    Json j;
    j["value"] = complex_to_json(sv.value);
    j["terms_used"] = sv.terms_used;
    j["tail_bound"] = sv.tail_bound;
    return j;
}

std::string matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::cohomology_phi: return "cohomology_phi";
        case MatrixKind::cohomology_psi: return "cohomology_psi";
        case MatrixKind::cohomology_mixed: return "cohomology_mixed";
        default: return "homology";
    }
}

Json to_json(const IntersectionMatrix& mat) {
    Json j;
    j["kind"] = matrix_kind_name(mat.kind);
    j["m"] = mat.m;
    Json rows = Json::array();
    for (int i = 0; i < mat.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < mat.dim(); ++k) {
            row.push_back(complex_to_json(mat.at(i, k)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json to_json(const PeriodRow& row) {
    Json j;
    j["dual"] = row.dual;
    j["x"] = row.x;
    Json entries = Json::array();
    for (const Complex& v : row.entries) entries.push_back(complex_to_json(v));
    j["entries"] = std::move(entries);
    j["tail_bound"] = row.tail_bound;
    return j;
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["identity"] = identity_name(report.identity);
    j["m"] = report.m;
    j["x"] = report.x;
    j["lhs"] = complex_to_json(report.lhs);
    j["rhs"] = complex_to_json(report.rhs);
    j["abs_residual"] = report.abs_residual;
    j["rel_residual"] = report.rel_residual;
    j["tol"] = report.tol;
    j["pass"] = report.pass;
    return j;
}

} // namespace mfm
