#include "exsym/quadext_json.hpp"

namespace exsym {

namespace {

BracketTensor bracket_from_json(const Json& j, int dim, const std::string& where) {
    BracketTensor b(dim);
    if (!j.is_array()) throw std::invalid_argument(where + ": bracket not array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument(where + ": bracket entry must be [i, j, coeffs]");
        int i = e[0].get<int>(), jj = e[1].get<int>();
        if (i < 0 || jj < 0 || i >= dim || jj >= dim || i >= jj)
            throw std::invalid_argument(where + ": bracket entry needs 0 <= i < j < dim");
        VecQ v = vecq_from_json(e[2]);
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument(where + ": bracket coefficient length != dim");
        b.set(i, jj, v);
    }
    return b;
}

Json bracket_to_json(const BracketTensor& b) {
    Json out = Json::array();
    b.for_each([&](int i, int j, const std::vector<BracketTerm>&) {
        out.push_back(Json::array({i, j, vecq_to_json(b.of(i, j))}));
    });
    return out;
}

MatQ square_from_json(const Json& j, int dim, const std::string& what) {
    MatQ m = matq_from_json(j);
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("quadext.v1: " + what + " shape != dim x dim");
    return m;
}

}  // namespace

Json altform_to_json(const AltForm& w) {
    Json out = Json::array();
    for (const auto& [idx, v] : w.entries()) out.push_back(Json::array({idx, vecq_to_json(v)}));
    return out;
}

AltForm altform_from_json(const Json& j, int arity, int dim, int vdim) {
    AltForm w(arity, dim, vdim);
    if (!j.is_array()) throw std::invalid_argument("form: expected array of entries");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("form: entry must be [indices, coeffs]");
        auto idx = e[0].get<std::vector<int>>();
        if (static_cast<int>(idx.size()) != arity)
            throw std::invalid_argument("form: index tuple length != arity");
        for (std::size_t q = 0; q < idx.size(); ++q) {
            if (idx[q] < 0 || idx[q] >= dim) throw std::invalid_argument("form: index out of range");
            if (q > 0 && idx[q] <= idx[q - 1])
                throw std::invalid_argument("form: indices must be strictly increasing");
        }
        VecQ v = vecq_from_json(e[1]);
        if (static_cast<int>(v.size()) != vdim)
            throw std::invalid_argument("form: value length != value dim");
        w.set(idx, v);
    }
    return w;
}

Json pair_to_json(const LiePair& l) {
    Json j;
    j["dim"] = l.dim;
    j["labels"] = l.labels;
    j["bracket"] = bracket_to_json(l.bracket);
    j["D"] = matq_to_json(l.D);
    j["theta"] = matq_to_json(l.theta);
    return j;
}

LiePair pair_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("quadext.v1: pair must be object");
    for (const char* key : {"dim", "labels", "bracket", "D", "theta"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("quadext.v1: pair missing field ") + key);
    LiePair l;
    l.dim = j["dim"].get<int>();
    if (l.dim < 0) throw std::invalid_argument("quadext.v1: negative pair dim");
    l.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(l.labels.size()) != l.dim)
        throw std::invalid_argument("quadext.v1: pair labels length != dim");
    l.bracket = bracket_from_json(j["bracket"], l.dim, "quadext.v1");
    l.D = square_from_json(j["D"], l.dim, "pair D");
    l.theta = square_from_json(j["theta"], l.dim, "pair theta");
    return l;
}

Json module_to_json(const ModuleData& a) {
    Json j;
    j["dim"] = a.dim;
    j["labels"] = a.labels;
    Json rho = Json::array();
    for (const auto& m : a.rho) rho.push_back(matq_to_json(m));
    j["rho"] = rho;
    j["gram"] = matq_to_json(a.gram);
    j["D"] = matq_to_json(a.D);
    j["theta"] = matq_to_json(a.theta);
    return j;
}

ModuleData module_from_json(const Json& j, int l_dim) {
    if (!j.is_object()) throw std::invalid_argument("quadext.v1: module must be object");
    for (const char* key : {"dim", "labels", "rho", "gram", "D", "theta"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("quadext.v1: module missing field ") + key);
    ModuleData a;
    a.dim = j["dim"].get<int>();
    if (a.dim < 0) throw std::invalid_argument("quadext.v1: negative module dim");
    a.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(a.labels.size()) != a.dim)
        throw std::invalid_argument("quadext.v1: module labels length != dim");
    if (!j["rho"].is_array() || static_cast<int>(j["rho"].size()) != l_dim)
        throw std::invalid_argument("quadext.v1: rho must list one matrix per pair generator");
    for (const auto& m : j["rho"]) a.rho.push_back(square_from_json(m, a.dim, "rho"));
    a.gram = square_from_json(j["gram"], a.dim, "module gram");
    a.D = square_from_json(j["D"], a.dim, "module D");
    a.theta = square_from_json(j["theta"], a.dim, "module theta");
    return a;
}

Json datum_to_json(const LiePair& l, const ModuleData& a, const QuadCocycle& z) {
    Json j;
    j["schema"] = "quadext.v1";
    j["pair"] = pair_to_json(l);
    j["module"] = module_to_json(a);
    Json zc;
    zc["alpha"] = altform_to_json(z.alpha);
    zc["gamma"] = altform_to_json(z.gamma);
    j["cocycle"] = zc;
    return j;
}

std::tuple<LiePair, ModuleData, QuadCocycle> datum_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("quadext.v1: expected object");
    if (!j.contains("schema") || j["schema"] != "quadext.v1")
        throw std::invalid_argument("quadext.v1: missing or wrong schema tag");
    for (const char* key : {"pair", "module", "cocycle"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("quadext.v1: missing field ") + key);
    LiePair l = pair_from_json(j["pair"]);
    ModuleData a = module_from_json(j["module"], l.dim);
    const Json& zc = j["cocycle"];
    if (!zc.is_object() || !zc.contains("alpha") || !zc.contains("gamma"))
        throw std::invalid_argument("quadext.v1: cocycle needs alpha and gamma");
    QuadCocycle z{altform_from_json(zc["alpha"], 2, l.dim, a.dim),
                  altform_from_json(zc["gamma"], 3, l.dim, 1)};
    return {l, a, z};
}

Json cochain_to_json(const QuadCochain& c) {
    Json j;
    j["schema"] = "quadext.v1";
    j["tau"] = matq_to_json(c.tau);
    j["sigma"] = altform_to_json(c.sigma);
    return j;
}

QuadCochain cochain_from_json(const Json& j, int l_dim, int a_dim) {
    if (!j.is_object()) throw std::invalid_argument("quadext.v1: expected object");
    if (!j.contains("schema") || j["schema"] != "quadext.v1")
        throw std::invalid_argument("quadext.v1: missing or wrong schema tag");
    if (!j.contains("tau") || !j.contains("sigma"))
        throw std::invalid_argument("quadext.v1: cochain needs tau and sigma");
    QuadCochain c;
    c.tau = matq_from_json(j["tau"]);
    if (c.tau.rows() != a_dim || c.tau.cols() != l_dim)
        throw std::invalid_argument("quadext.v1: tau shape != module dim x pair dim");
    c.sigma = altform_from_json(j["sigma"], 2, l_dim, 1);
    return c;
}

}  // namespace exsym
