#include "exsym/algebra_json.hpp"

namespace exsym {

Json vecq_to_json(const VecQ& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

VecQ vecq_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector: expected array");
    VecQ v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_string()) throw std::invalid_argument("vector: entries must be strings");
        v.push_back(rat_parse(x.get<std::string>()));
    }
    return v;
}

Json matq_to_json(const MatQ& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vecq_to_json(m.row_vec(i)));
    return rows;
}

MatQ matq_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected array of rows");
    std::vector<VecQ> rows;
    for (const auto& r : j) rows.push_back(vecq_from_json(r));
    if (rows.empty()) return MatQ();
    MatQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("matrix: ragged rows");
        for (int k = 0; k < m.cols(); ++k) m(i, k) = rows[i][k];
    }
    return m;
}

Json algebra_to_json(const Algebra& g) {
    Json j;
    j["schema"] = "algebra.v1";
    j["dim"] = g.dim;
    j["labels"] = g.labels;
    j["weak"] = g.weak;
    Json bracket = Json::array();
    g.bracket.for_each([&](int i, int jj, const std::vector<BracketTerm>&) {
        VecQ v = g.bracket.of(i, jj);
        bracket.push_back(Json::array({i, jj, vecq_to_json(v)}));
    });
    j["bracket"] = bracket;
    j["gram"] = matq_to_json(g.gram);
    j["D"] = matq_to_json(g.D);
    j["theta"] = matq_to_json(g.theta);
    return j;
}

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("algebra.v1: expected object");
    if (!j.contains("schema") || j["schema"] != "algebra.v1")
        throw std::invalid_argument("algebra.v1: missing or wrong schema tag");
    for (const char* key : {"dim", "labels", "bracket", "gram", "D", "theta"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("algebra.v1: missing field ") + key);
    Algebra g;
    if (!j["dim"].is_number_integer()) throw std::invalid_argument("algebra.v1: dim not integer");
    g.dim = j["dim"].get<int>();
    if (g.dim < 0) throw std::invalid_argument("algebra.v1: negative dim");
    g.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(g.labels.size()) != g.dim)
        throw std::invalid_argument("algebra.v1: labels length != dim");
    g.weak = j.value("weak", false);
    g.gram = matq_from_json(j["gram"]);
    g.D = matq_from_json(j["D"]);
    g.theta = matq_from_json(j["theta"]);
    for (const MatQ* m : {&g.gram, &g.D, &g.theta})
        if (m->rows() != g.dim || m->cols() != g.dim)
            throw std::invalid_argument("algebra.v1: matrix shape != dim x dim");
    g.bracket = BracketTensor(g.dim);
    if (!j["bracket"].is_array()) throw std::invalid_argument("algebra.v1: bracket not array");
    for (const auto& e : j["bracket"]) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("algebra.v1: bracket entry must be [i, j, coeffs]");
        int i = e[0].get<int>(), jj = e[1].get<int>();
        if (i < 0 || jj < 0 || i >= g.dim || jj >= g.dim || i >= jj)
            throw std::invalid_argument("algebra.v1: bracket entry needs 0 <= i < j < dim");
        VecQ v = vecq_from_json(e[2]);
        if (static_cast<int>(v.size()) != g.dim)
            throw std::invalid_argument("algebra.v1: bracket coefficient length != dim");
        g.bracket.set(i, jj, v);
    }
    return g;
}

}  // namespace exsym
