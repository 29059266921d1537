#include "exsym/catalog.hpp"

#include <stdexcept>

namespace exsym {

namespace {

MatQ rot2() {
    MatQ m(2, 2);
    m(0, 1) = -1;
    m(1, 0) = 1;
    return m;
}

LiePair plane_pair() {
    LiePair l;
    l.dim = 2;
    l.labels = {"X", "Y"};
    l.bracket = BracketTensor(2);
    l.D = rot2();
    l.theta = MatQ::diag({1, -1});
    return l;
}

LiePair heisenberg_pair() {
    LiePair l;
    l.dim = 3;
    l.labels = {"X", "Y", "Z"};
    l.bracket = BracketTensor(3);
    l.bracket.add(0, 1, 2, 1);
    l.D = MatQ(3, 3);
    l.D(1, 0) = 1;   // D(X) = Y
    l.D(0, 1) = -1;  // D(Y) = -X
    l.theta = MatQ::diag({1, -1, -1});
    return l;
}

// basis (H,X,Y); kappa = -1 picks su(2), kappa = +1 picks sl(2,R)
LiePair rank_one_pair(int kappa) {
    LiePair l;
    l.dim = 3;
    l.labels = {"H", "X", "Y"};
    l.bracket = BracketTensor(3);
    l.bracket.add(0, 1, 2, 2);                               // [H,X] = 2Y
    l.bracket.add(0, 2, 1, kappa == -1 ? Rat(-2) : Rat(2));  // [H,Y] = -+ 2X
    l.bracket.add(1, 2, 0, 2);                               // [X,Y] = 2H
    l.D = MatQ(3, 3);           // D = (1/2) ad(X): H -> -Y, Y -> H
    l.D(2, 0) = -1;
    l.D(0, 2) = 1;
    l.theta = MatQ::diag({1, -1, -1});
    return l;
}

ModuleData empty_module(int l_dim) {
    ModuleData a;
    a.dim = 0;
    a.rho.assign(l_dim, MatQ(0, 0));
    a.gram = MatQ(0, 0);
    a.D = MatQ(0, 0);
    a.theta = MatQ(0, 0);
    return a;
}

// one positive-definite trivial pair: gram Id, D a rotation, theta diag(1,-1)
ModuleData trivial_pair_module(int l_dim, const std::string& tag) {
    ModuleData a;
    a.dim = 2;
    a.labels = {tag + "_p", tag + "_m"};
    a.rho.assign(l_dim, MatQ(2, 2));
    a.gram = MatQ::identity(2);
    a.D = rot2();
    a.theta = MatQ::diag({1, -1});
    return a;
}

// adjoint module of a rank-one pair; theta_sign = -1 gives theta_a = -theta_l
ModuleData adjoint_module(const LiePair& l, int kappa, int theta_sign, const std::string& tag) {
    ModuleData a;
    a.dim = 3;
    for (const auto& s : l.labels) a.labels.push_back(tag + "_" + s);
    for (int i = 0; i < 3; ++i) a.rho.push_back(l.bracket.ad_basis(i));
    // gram = kappa * Killing form: 8 Id for su(2), diag(8,-8,8) for sl(2,R)
    a.gram = kappa == -1 ? MatQ::diag({8, 8, 8}) : MatQ::diag({8, -8, 8});
    a.D = l.D;
    a.theta = Rat(theta_sign) * l.theta;
    return a;
}

ModuleData spin_module(int l_dim, int kappa, const std::string& tag) {
    ModuleData a;
    a.dim = 4;
    a.labels = {tag + "_a1", tag + "_a2", tag + "_a3", tag + "_a4"};
    const Rat kp = kappa;
    MatQ rH(4, 4), rX(4, 4), rY(4, 4);
    rH(1, 0) = 1;    // H(a1) = a2
    rH(0, 1) = kp;   // H(a2) = kappa a1
    rH(3, 2) = -1;   // H(a3) = -a4
    rH(2, 3) = -kp;  // H(a4) = -kappa a3
    rX(2, 0) = -1;   // X(a1) = -a3
    rX(3, 1) = -1;   // X(a2) = -a4
    rX(0, 2) = 1;    // X(a3) = a1
    rX(1, 3) = 1;    // X(a4) = a2
    rY(3, 0) = 1;    // Y(a1) = a4
    rY(2, 1) = kp;   // Y(a2) = kappa a3
    rY(1, 2) = 1;    // Y(a3) = a2
    rY(0, 3) = kp;   // Y(a4) = kappa a1
    a.rho = {rH, rX, rY};
    (void)l_dim;
    a.gram = MatQ::diag({-kp, 1, -kp, 1});
    a.D = MatQ(4, 4);
    a.D(3, 1) = -1;  // D(a2) = -a4
    a.D(1, 3) = 1;   // D(a4) = a2
    a.theta = MatQ::diag({1, 1, -1, -1});
    return a;
}

}  // namespace

ModuleData module_direct_sum(const ModuleData& a, const ModuleData& b, int l_dim) {
    ModuleData r;
    r.dim = a.dim + b.dim;
    r.labels = a.labels;
    r.labels.insert(r.labels.end(), b.labels.begin(), b.labels.end());
    for (int i = 0; i < l_dim; ++i)
        r.rho.push_back(MatQ::block_diag(i < static_cast<int>(a.rho.size()) ? a.rho[i]
                                                                            : MatQ(a.dim, a.dim),
                                         i < static_cast<int>(b.rho.size()) ? b.rho[i]
                                                                            : MatQ(b.dim, b.dim)));
    r.gram = MatQ::block_diag(a.gram, b.gram);
    r.D = MatQ::block_diag(a.D, b.D);
    r.theta = MatQ::block_diag(a.theta, b.theta);
    return r;
}

std::string format_descriptor(const CatalogDescriptor& d) {
    std::string s = "tfull-" + d.case_id;
    if (d.case_id == "4" || d.case_id == "5") {
        s += ":k=" + std::to_string(d.k) + ",l=" + std::to_string(d.l) +
             ",m=" + std::to_string(d.m);
        s += ":c=" + rat_str(d.c);
    }
    s += ":a0=" + std::to_string(d.a0);
    return s;
}

CatalogDescriptor parse_descriptor(const std::string& s) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("descriptor '" + s + "': " + why);
    };
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t nxt = s.find(':', pos);
        if (nxt == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, nxt - pos));
        pos = nxt + 1;
    }
    if (parts.empty() || parts[0].rfind("tfull-", 0) != 0) fail("expected prefix 'tfull-'");
    CatalogDescriptor d;
    d.case_id = parts[0].substr(6);
    if (d.case_id != "1" && d.case_id != "2a" && d.case_id != "2b" && d.case_id != "3" &&
        d.case_id != "4" && d.case_id != "5")
        fail("unknown case id '" + d.case_id + "'");
    const bool rank_one = d.case_id == "4" || d.case_id == "5";
    bool saw_klm = false, saw_c = false, saw_a0 = false;
    for (std::size_t p = 1; p < parts.size(); ++p) {
        const std::string& seg = parts[p];
        if (seg.rfind("k=", 0) == 0) {
            if (!rank_one) fail("k/l/m only valid for cases 4 and 5");
            if (saw_klm) fail("duplicate k/l/m segment");
            saw_klm = true;
            int* dest[3] = {&d.k, &d.l, &d.m};
            const char* names = "klm";
            std::size_t q = 0;
            for (int t = 0; t < 3; ++t) {
                std::size_t e = seg.find(',', q);
                std::string item = seg.substr(q, e == std::string::npos ? e : e - q);
                if (item.size() < 3 || item[0] != names[t] || item[1] != '=')
                    fail("expected k=..,l=..,m=..");
                try {
                    std::size_t used = 0;
                    *dest[t] = std::stoi(item.substr(2), &used);
                    if (used != item.size() - 2) throw std::invalid_argument(item);
                } catch (...) {
                    fail("bad count in '" + item + "'");
                }
                if (*dest[t] < 0) fail("counts must be nonnegative");
                if (e == std::string::npos) {
                    if (t != 2) fail("expected k=..,l=..,m=..");
                    break;
                }
                if (t == 2) fail("unexpected content after m=..");
                q = e + 1;
            }
        } else if (seg.rfind("c=", 0) == 0) {
            if (!rank_one) fail("c only valid for cases 4 and 5");
            if (saw_c) fail("duplicate c segment");
            saw_c = true;
            try {
                d.c = rat_parse(seg.substr(2));
            } catch (...) {
                fail("bad rational in '" + seg + "'");
            }
        } else if (seg.rfind("a0=", 0) == 0) {
            if (saw_a0) fail("duplicate a0 segment");
            saw_a0 = true;
            try {
                std::size_t used = 0;
                d.a0 = std::stoi(seg.substr(3), &used);
                if (used != seg.size() - 3) throw std::invalid_argument(seg);
            } catch (...) {
                fail("bad count in '" + seg + "'");
            }
            if (d.a0 < 0) fail("a0 must be nonnegative");
        } else {
            fail("unknown segment '" + seg + "'");
        }
    }
    return d;
}

CatalogData catalog(const CatalogDescriptor& d) {
    CatalogData out;
    if (d.case_id == "1") {
        out.l.dim = 0;
        out.l.bracket = BracketTensor(0);
        out.l.D = MatQ(0, 0);
        out.l.theta = MatQ(0, 0);
        ModuleData a;
        a.dim = 2;
        a.labels = {"A1", "A2"};
        a.gram = Rat(-1) * MatQ::identity(2);
        a.D = rot2();
        a.theta = MatQ::diag({1, -1});
        out.a = a;
        out.z = zero_cocycle(0, a.dim);
    } else if (d.case_id == "2a" || d.case_id == "2b") {
        out.l = plane_pair();
        ModuleData a;
        a.dim = 1;
        a.labels = {"A0"};
        a.rho.assign(2, MatQ(1, 1));
        a.gram = MatQ::diag({d.case_id == "2a" ? Rat(-1) : Rat(1)});
        a.D = MatQ(1, 1);
        a.theta = MatQ::diag({-1});
        out.a = a;
        out.z = zero_cocycle(2, 1);
        out.z.alpha.set({0, 1}, VecQ{1});  // alpha(X,Y) = A0
    } else if (d.case_id == "3") {
        out.l = heisenberg_pair();
        ModuleData a;
        a.dim = 2;
        a.labels = {"A1", "A2"};
        a.rho.assign(3, MatQ(2, 2));
        a.gram = MatQ::identity(2);
        a.D = rot2();
        a.theta = MatQ::diag({-1, 1});
        out.a = a;
        out.z = zero_cocycle(3, 2);
        out.z.alpha.set({0, 2}, VecQ{1, 0});  // alpha(X,Z) = A1
        out.z.alpha.set({1, 2}, VecQ{0, 1});  // alpha(Y,Z) = A2
    } else {
        const int kappa = d.case_id == "4" ? -1 : 1;
        out.l = rank_one_pair(kappa);
        ModuleData a = empty_module(3);
        for (int i = 1; i <= d.k; ++i)
            a = module_direct_sum(a, adjoint_module(out.l, kappa, -1, "a3_" + std::to_string(i)),
                                  3);
        for (int i = 1; i <= d.l; ++i)
            a = module_direct_sum(a, adjoint_module(out.l, kappa, 1, "a3h_" + std::to_string(i)),
                                  3);
        for (int i = 1; i <= d.m; ++i)
            a = module_direct_sum(a, spin_module(3, kappa, "a4_" + std::to_string(i)), 3);
        out.a = a;
        out.z = zero_cocycle(3, a.dim);
        out.z.gamma.set({0, 1, 2}, VecQ{4 * d.c});  // gamma(H,X,Y) = 4c
    }
    for (int t = 1; t <= d.a0; ++t)
        out.a = module_direct_sum(out.a, trivial_pair_module(out.l.dim, "a0_" + std::to_string(t)),
                                  out.l.dim);
    if (d.a0 > 0) {
        // widen the cocycle's value dimension to the enlarged module
        QuadCocycle z = zero_cocycle(out.l.dim, out.a.dim);
        for (const auto& [combo, v] : out.z.alpha.entries()) {
            VecQ w(out.a.dim);
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
            z.alpha.set(combo, w);
        }
        z.gamma = out.z.gamma;
        out.z = z;
    }
    return out;
}

std::vector<CatalogFamily> catalog_families() {
    return {
        {"tfull-1", "l = 0, a definite plane with rotation derivation"},
        {"tfull-2a", "l abelian plane, one module line, alpha(X,Y) = A0; sign variant tfull-2b"},
        {"tfull-3", "l Heisenberg, definite module plane, alpha(X,Z) = A1, alpha(Y,Z) = A2"},
        {"tfull-4", "l = su(2), a = a3^k + a3h^l + a4^m, gamma(H,X,Y) = 4c"},
        {"tfull-5", "l = sl(2,R), a = a3^k + a3h^l + a4^m, gamma(H,X,Y) = 4c"},
    };
}

}  // namespace exsym
