#include "exsym/weakext_json.hpp"

#include "exsym/algebra_json.hpp"

namespace exsym {

namespace {

MatQ sized_from_json(const Json& j, int rows, int cols, const std::string& what) {
    MatQ m = matq_from_json(j);
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument("weakext.v1: " + what + " has wrong shape");
    return m;
}

std::vector<MatQ> matrix_list_from_json(const Json& j, int count, const std::string& what) {
    if (!j.is_array() || static_cast<int>(j.size()) != count)
        throw std::invalid_argument("weakext.v1: " + what + " must list one matrix per R-coordinate");
    std::vector<MatQ> out;
    for (const auto& e : j) out.push_back(matq_from_json(e));
    return out;
}

Json matrix_list_to_json(const std::vector<MatQ>& v) {
    Json out = Json::array();
    for (const auto& m : v) out.push_back(matq_to_json(m));
    return out;
}

}  // namespace

Json central_datum_to_json(const CentralExtensionDatum& d) {
    Json j;
    j["schema"] = "weakext.v1";
    j["kind"] = "central_extension_datum";
    j["base"] = algebra_to_json(d.base);
    j["r_dim"] = d.r_dim;
    j["omega"] = altform_to_json(d.omega);
    return j;
}

CentralExtensionDatum central_datum_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("weakext.v1: expected object");
    if (!j.contains("schema") || j["schema"] != "weakext.v1")
        throw std::invalid_argument("weakext.v1: missing or wrong schema tag");
    if (!j.contains("kind") || j["kind"] != "central_extension_datum")
        throw std::invalid_argument("weakext.v1: kind != central_extension_datum");
    for (const char* key : {"base", "r_dim", "omega"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("weakext.v1: missing field ") + key);
    CentralExtensionDatum d;
    d.base = algebra_from_json(j["base"]);
    d.r_dim = j["r_dim"].get<int>();
    if (d.r_dim < 1) throw std::invalid_argument("weakext.v1: r_dim must be positive");
    d.omega = altform_from_json(j["omega"], 2, d.base.dim, d.r_dim);
    return d;
}

Json classifier_to_json(const ClassifierDatum& d) {
    Json j;
    j["schema"] = "weakext.v1";
    j["kind"] = "classifier_datum";
    j["shape"] = d.shape;
    j["r_dim"] = d.r_dim;
    j["gram"] = matq_to_json(d.gram);
    j["B"] = matrix_list_to_json(d.B);
    if (d.shape == "lorentz-rBeta") {
        j["r0"] = vecq_to_json(d.r0);
        j["eta"] = matq_to_json(d.eta);
    }
    if (d.shape == "lorentz-B1B2B") {
        j["B1"] = matrix_list_to_json(d.B1);
        j["B2"] = matrix_list_to_json(d.B2);
    }
    return j;
}

ClassifierDatum classifier_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("weakext.v1: expected object");
    if (!j.contains("schema") || j["schema"] != "weakext.v1")
        throw std::invalid_argument("weakext.v1: missing or wrong schema tag");
    if (!j.contains("kind") || j["kind"] != "classifier_datum")
        throw std::invalid_argument("weakext.v1: kind != classifier_datum");
    for (const char* key : {"shape", "r_dim", "gram", "B"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("weakext.v1: missing field ") + key);
    ClassifierDatum d;
    d.shape = j["shape"].get<std::string>();
    if (d.shape != "riemann-B" && d.shape != "lorentz-rBeta" && d.shape != "lorentz-B1B2B")
        throw std::invalid_argument("weakext.v1: unknown shape tag");
    d.r_dim = j["r_dim"].get<int>();
    if (d.r_dim < 1) throw std::invalid_argument("weakext.v1: r_dim must be positive");
    d.gram = matq_from_json(j["gram"]);
    if (d.gram.rows() != d.gram.cols())
        throw std::invalid_argument("weakext.v1: gram must be square");
    const int p = d.p();
    d.B = matrix_list_from_json(j["B"], d.r_dim, "B");
    for (const auto& m : d.B)
        if (m.rows() != p || m.cols() != p)
            throw std::invalid_argument("weakext.v1: B entry has wrong shape");
    if (d.shape == "lorentz-rBeta") {
        for (const char* key : {"r0", "eta"})
            if (!j.contains(key))
                throw std::invalid_argument(std::string("weakext.v1: missing field ") + key);
        d.r0 = vecq_from_json(j["r0"]);
        if (static_cast<int>(d.r0.size()) != d.r_dim)
            throw std::invalid_argument("weakext.v1: r0 length != r_dim");
        d.eta = sized_from_json(j["eta"], p, d.r_dim, "eta");
    }
    if (d.shape == "lorentz-B1B2B") {
        for (const char* key : {"B1", "B2"})
            if (!j.contains(key))
                throw std::invalid_argument(std::string("weakext.v1: missing field ") + key);
        d.B1 = matrix_list_from_json(j["B1"], d.r_dim, "B1");
        d.B2 = matrix_list_from_json(j["B2"], d.r_dim, "B2");
    }
    return d;
}

}  // namespace exsym
