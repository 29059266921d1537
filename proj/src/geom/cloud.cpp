#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "exsym/geom.hpp"

namespace exsym {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::ordered_json gram_rows(const MatD& g) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < g.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < g.cols(); ++j) row.push_back(num(g(i, j)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<VecD> parameter_grid(int param_dim, double lo, double hi, int count) {
    if (param_dim < 0 || count < 1) throw std::invalid_argument("parameter_grid: bad shape");
    std::vector<VecD> out;
    VecD p = VecD::Constant(param_dim, lo);
    std::vector<int> idx(param_dim, 0);
    const double step = count > 1 ? (hi - lo) / (count - 1) : 0.0;
    const long total = static_cast<long>(std::pow(count, param_dim));
    for (long n = 0; n < total; ++n) {
        long rem = n;
        for (int a = param_dim - 1; a >= 0; --a) {
            p(a) = lo + step * static_cast<double>(rem % count);
            rem /= count;
        }
        out.push_back(p);
    }
    return out;
}

std::string cloud_csv(const EmbeddingSampler& s, const std::vector<VecD>& params) {
    std::string out;
    out += "# tag: " + s.tag + "\n";
    out += "# gram: " + gram_rows(s.gram).dump() + "\n";
    for (int a = 0; a < s.param_dim; ++a) out += "p" + std::to_string(a) + ",";
    for (int i = 0; i < s.ambient_dim; ++i)
        out += "x" + std::to_string(i) + (i + 1 < s.ambient_dim ? "," : "\n");
    for (const VecD& p : params) {
        const VecD x = s.eval(p);
        for (int a = 0; a < s.param_dim; ++a) out += num(p(a)) + ",";
        for (int i = 0; i < s.ambient_dim; ++i)
            out += num(x(i)) + (i + 1 < s.ambient_dim ? "," : "\n");
    }
    return out;
}

std::string cloud_json(const EmbeddingSampler& s, const std::vector<VecD>& params) {
    nlohmann::ordered_json j;
    j["tag"] = s.tag;
    j["ambient_dim"] = s.ambient_dim;
    j["param_dim"] = s.param_dim;
    j["gram"] = gram_rows(s.gram);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const VecD& p : params) {
        const VecD x = s.eval(p);
        nlohmann::ordered_json row;
        nlohmann::ordered_json pj = nlohmann::ordered_json::array();
        for (int a = 0; a < s.param_dim; ++a) pj.push_back(num(p(a)));
        nlohmann::ordered_json xj = nlohmann::ordered_json::array();
        for (int i = 0; i < s.ambient_dim; ++i) xj.push_back(num(x(i)));
        row["params"] = pj;
        row["point"] = xj;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace exsym
