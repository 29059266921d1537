#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exsym/balanced.hpp"
#include "exsym/catalog.hpp"
#include "exsym/extension.hpp"
#include "exsym/grading.hpp"
#include "exsym/quadext_json.hpp"
#include "exsym/structure.hpp"

using namespace exsym;

namespace {

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

QuadCochain rnd_cochain(int nl, int na, std::mt19937& rng) {
    QuadCochain c = zero_cochain(nl, na);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nl; ++j) c.tau(i, j) = rnd_rat(rng);
    for (int i = 0; i < nl; ++i)
        for (int j = i + 1; j < nl; ++j) c.sigma.set({i, j}, {rnd_rat(rng)});
    return c;
}

// the one-parameter family of invariant cochains over the Heisenberg pair:
// tau(X) = t A2, tau(Y) = -t A1, tau(Z) = 0, sigma = 0
QuadCochain heisenberg_cochain(const Rat& t) {
    QuadCochain c = zero_cochain(3, 2);
    c.tau(1, 0) = t;
    c.tau(0, 1) = -t;
    return c;
}

CatalogData cat(const std::string& s) { return catalog(parse_descriptor(s)); }

// 4-dim abelian pair with trivial module where d(gamma) = (1/2)<alpha^alpha>
// genuinely compares nonzero 4-forms
CatalogData four_dim_defect() {
    CatalogData d;
    d.l.dim = 4;
    d.l.labels = {"e1", "e2", "e3", "e4"};
    d.l.bracket = BracketTensor(4);
    d.l.D = MatQ(4, 4);
    d.l.theta = MatQ::identity(4);
    d.a.dim = 2;
    d.a.labels = {"A1", "A2"};
    d.a.rho.assign(4, MatQ(2, 2));
    d.a.gram = MatQ::identity(2);
    d.a.D = MatQ(2, 2);
    d.a.theta = MatQ::identity(2);
    d.z = zero_cocycle(4, 2);
    d.z.alpha.set({0, 1}, {Rat(1), Rat(0)});
    d.z.alpha.set({2, 3}, {Rat(1), Rat(0)});
    return d;
}

bool status_of(const Report& r, const std::string& name, const std::string& status) {
    const CheckResult* c = r.find(name);
    return c && c->status == status;
}

}  // namespace

TEST_CASE("differential of scalar forms") {
    auto c3 = cat("tfull-3");
    BracketTensor abelian(2);

    AltForm eta(1, 2, 1);
    eta.set({0}, {Rat(5)});
    eta.set({1}, {Rat(-2)});
    CHECK(ce_differential(eta, abelian, {}).is_zero());

    // dual of the Heisenberg center: d sigma_Z (X, Y) = -sigma_Z([X, Y]) = -1
    AltForm sz(1, 3, 1);
    sz.set({2}, {Rat(1)});
    AltForm dsz = ce_differential(sz, c3.l.bracket, {});
    CHECK(dsz.scalar({0, 1}) == Rat(-1));
    CHECK(dsz.scalar({0, 2}) == 0);
    CHECK(dsz.scalar({1, 2}) == 0);

    CHECK(ce_differential(c3.z.alpha, c3.l.bracket, c3.a.rho).is_zero());

    // d o d = 0 with coefficients, on a random 1-form over the case-4 module
    auto c4 = cat("tfull-4:k=1,l=0,m=0:c=0:a0=0");
    std::mt19937 rng(7);
    AltForm w(1, 3, c4.a.dim);
    for (int i = 0; i < 3; ++i) {
        VecQ v(c4.a.dim);
        for (auto& x : v) x = rnd_rat(rng);
        w.set({i}, v);
    }
    AltForm ddw = ce_differential(ce_differential(w, c4.l.bracket, c4.a.rho), c4.l.bracket,
                                  c4.a.rho);
    CHECK(ddw.is_zero());
}

TEST_CASE("wedge pairing") {
    auto c3 = cat("tfull-3");
    AltForm zero2(2, 3, 2);
    CHECK(wedge_inner(zero2, zero2, c3.a.gram).is_zero());
    // 4-forms on a 3-dim space vanish, consistent with gamma = 0
    CHECK(wedge_inner(c3.z.alpha, c3.z.alpha, c3.a.gram).is_zero());

    auto c4 = cat("tfull-4:k=0,l=0,m=0:c=1:a0=0");
    CHECK(ce_differential(c4.z.gamma, c4.l.bracket, {}).is_zero());
    CHECK(wedge_inner(c4.z.alpha, c4.z.alpha, c4.a.gram).is_zero());
}

TEST_CASE("cocycle recognition") {
    for (const std::string& s :
         {"tfull-1", "tfull-2a", "tfull-2b", "tfull-3", "tfull-4:k=1,l=1,m=1:c=1:a0=0",
          "tfull-5:k=1,l=1,m=1:c=-1:a0=1"}) {
        CAPTURE(s);
        auto d = cat(s);
        CHECK(is_cocycle(zero_cocycle(d.l.dim, d.a.dim), d.l, d.a).all_pass());
        CHECK(is_cocycle(d.z, d.l, d.a).all_pass());
    }

    // on a 3-dim pair every scalar volume multiple is admissible: (alpha, vol)
    // lies in the orbit of (alpha, 0)
    auto c3 = cat("tfull-3");
    QuadCocycle zvol = c3.z;
    zvol.gamma.set({0, 1, 2}, {Rat(1)});
    CHECK(is_cocycle(zvol, c3.l, c3.a).all_pass());
    CHECK(cocycle_act(c3.z, heisenberg_cochain(Rat(1, 2)), c3.l, c3.a) == zvol);

    // perturbing alpha breaks D-invariance
    QuadCocycle zbad = c3.z;
    zbad.alpha.add({0, 1}, {Rat(1), Rat(0)});
    Report r = is_cocycle(zbad, c3.l, c3.a);
    CHECK(!r.all_pass());
    CHECK(status_of(r, "alpha-D-invariant", "fail"));

    // genuine failure of the 4-form identity, and the matching Jacobi defect
    auto fd = four_dim_defect();
    Report r4 = is_cocycle(fd.z, fd.l, fd.a);
    CHECK(!r4.all_pass());
    CHECK(status_of(r4, "d-gamma-half-wedge", "fail"));
    Algebra g = build_extension_unchecked(fd.l, fd.a, fd.z);
    Report vg = verify_algebra(g);
    CHECK(!vg.all_pass());
    CHECK(status_of(vg, "jacobi", "fail"));
}

TEST_CASE("cochain group law") {
    auto c3 = cat("tfull-3");
    const MatQ& G = c3.a.gram;
    std::mt19937 rng(11);
    QuadCochain e = zero_cochain(3, 2);

    QuadCochain c = rnd_cochain(3, 2, rng);
    CHECK(cochain_mul(c, e, G) == c);
    CHECK(cochain_mul(e, c, G) == c);
    CHECK(cochain_mul(c, cochain_inv(c, G), G) == e);
    CHECK(cochain_mul(cochain_inv(c, G), c, G) == e);

    // (tau, 0)(-tau, 0) = (0, -1/2<tau^tau>) = (0, 0)
    QuadCochain t = c;
    t.sigma = AltForm(2, 3, 1);
    QuadCochain tneg = t;
    tneg.tau = t.tau * Rat(-1);
    CHECK(cochain_mul(t, tneg, G) == e);

    for (int trial = 0; trial < 10; ++trial) {
        QuadCochain c1 = rnd_cochain(3, 2, rng), c2 = rnd_cochain(3, 2, rng),
                    c3r = rnd_cochain(3, 2, rng);
        CHECK(cochain_mul(cochain_mul(c1, c2, G), c3r, G) ==
              cochain_mul(c1, cochain_mul(c2, c3r, G), G));
    }
}

TEST_CASE("cocycle right action") {
    auto c3 = cat("tfull-3");
    CHECK(cocycle_act(c3.z, zero_cochain(3, 2), c3.l, c3.a) == c3.z);

    // closure along the invariant family
    for (const Rat& t : {Rat(1), Rat(-2), Rat(3, 2)}) {
        QuadCochain c = heisenberg_cochain(t);
        CHECK(is_cochain(c, c3.l, c3.a).all_pass());
        QuadCocycle zt = cocycle_act(c3.z, c, c3.l, c3.a);
        CHECK(zt.gamma.scalar({0, 1, 2}) == 2 * t);
        CHECK(is_cocycle(zt, c3.l, c3.a).all_pass());
    }

    // compatibility z.(c1 c2) = (z.c1).c2 needs only rho-antisymmetry; test
    // with trivial and with nonzero action
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        QuadCochain c1 = rnd_cochain(3, 2, rng), c2 = rnd_cochain(3, 2, rng);
        CHECK(cocycle_act(c3.z, cochain_mul(c1, c2, c3.a.gram), c3.l, c3.a) ==
              cocycle_act(cocycle_act(c3.z, c1, c3.l, c3.a), c2, c3.l, c3.a));
    }
    auto c4 = cat("tfull-4:k=0,l=0,m=1:c=1:a0=0");
    for (int trial = 0; trial < 10; ++trial) {
        QuadCochain c1 = rnd_cochain(3, 4, rng), c2 = rnd_cochain(3, 4, rng);
        CHECK(cocycle_act(c4.z, cochain_mul(c1, c2, c4.a.gram), c4.l, c4.a) ==
              cocycle_act(cocycle_act(c4.z, c1, c4.l, c4.a), c2, c4.l, c4.a));
    }
}

TEST_CASE("extension of the trivial pair returns the module") {
    auto c1 = cat("tfull-1");
    Algebra g = build_extension(c1.l, c1.a, c1.z);
    CHECK(g.dim == 2);
    CHECK(g.labels == std::vector<std::string>{"A1", "A2"});
    CHECK(g.gram == c1.a.gram);
    CHECK(g.D == c1.a.D);
    CHECK(g.theta == c1.a.theta);
    CHECK(g.bracket.is_zero());
    CHECK(verify_algebra(g).all_pass());
}

TEST_CASE("extension brackets in low dimension") {
    auto c2 = cat("tfull-2a");
    Algebra g = build_extension(c2.l, c2.a, c2.z);
    REQUIRE(g.dim == 5);
    // basis order: sigma_X, sigma_Y, A0, X, Y
    CHECK(g.labels == std::vector<std::string>{"sigma_X", "sigma_Y", "A0", "X", "Y"});
    VecQ a0(5), sx(5), sy(5);
    a0[2] = 1;
    sx[0] = 1;
    sy[1] = 1;
    CHECK(g.bracket.of(3, 4) == a0);
    CHECK(g.bracket.of(3, 2) == sy);
    CHECK(g.bracket.of(4, 2) == Rat(-1) * sx);
    int nonzero = 0;
    g.bracket.for_each([&](int, int, const std::vector<BracketTerm>&) { ++nonzero; });
    CHECK(nonzero == 3);
    CHECK(verify_algebra(g).all_pass());

    Algebra g4 = build_extension(cat("tfull-4:k=0,l=0,m=1:c=0:a0=0").l,
                                 cat("tfull-4:k=0,l=0,m=1:c=0:a0=0").a,
                                 cat("tfull-4:k=0,l=0,m=1:c=0:a0=0").z);
    CHECK(g4.dim == 10);
    CHECK(verify_algebra(g4).all_pass());
}

TEST_CASE("extension rejects broken input") {
    auto fd = four_dim_defect();
    CHECK_THROWS_AS(build_extension(fd.l, fd.a, fd.z), std::invalid_argument);
}

TEST_CASE("catalog grid: axioms, triple, fullness, grading") {
    std::vector<std::string> descs;
    for (const std::string& base : {"tfull-1", "tfull-2a", "tfull-2b", "tfull-3"})
        for (int a0 : {0, 1}) descs.push_back(base + ":a0=" + std::to_string(a0));
    for (const std::string& base : {"tfull-4", "tfull-5"})
        for (const std::string& klm : {"k=0,l=0,m=0", "k=1,l=0,m=0", "k=0,l=1,m=0",
                                       "k=0,l=0,m=1", "k=1,l=1,m=1"})
            for (const std::string& c : {"0", "3/2"})
                for (int a0 : {0, 1})
                    descs.push_back(base + ":" + klm + ":c=" + c + ":a0=" + std::to_string(a0));

    for (const auto& s : descs) {
        CAPTURE(s);
        CatalogDescriptor d = parse_descriptor(s);
        auto data = catalog(d);
        CHECK(verify_pair(data.l).all_pass());
        CHECK(verify_module(data.l, data.a).all_pass());
        CHECK(is_cocycle(data.z, data.l, data.a).all_pass());
        Algebra g = build_extension(data.l, data.a, data.z);
        CHECK(verify_algebra(g).all_pass());
        CHECK(is_extrinsic_triple(g).holds);
        CHECK(is_full(g).holds);

        Grading gr = grade(g);
        CHECK(gr.pm.cols() == gr.mm.cols());
        // tangent block: index 1 on every catalog entry
        MatQ tangram = gr.mm.transpose() * g.gram * gr.mm;
        CHECK(inertia(tangram).first == 1);

        if (d.case_id == "4" || d.case_id == "5") {
            int k = d.k, l = d.l, m = d.m, n0 = d.a0;
            CHECK(gr.pp.cols() == k + m);
            CHECK(gr.mp.cols() == 2 + l + m);
            CHECK(gr.pm.cols() == 2 + k + l + m + n0);
            CHECK(gr.mm.cols() == 2 + k + l + m + n0);
        }
    }
}

TEST_CASE("balanced conditions on the catalog") {
    for (const std::string& s :
         {"tfull-1", "tfull-1:a0=1", "tfull-2a", "tfull-2b:a0=2", "tfull-3", "tfull-3:a0=1",
          "tfull-4:k=0,l=0,m=0:c=1:a0=0", "tfull-4:k=2,l=1,m=1:c=3/2:a0=1",
          "tfull-5:k=0,l=0,m=1:c=-1:a0=0"}) {
        CAPTURE(s);
        auto d = cat(s);
        Report r = balanced_check(d.l, d.a, d.z);
        CHECK(r.all_pass());
        auto [t1, t2] = fullness_T1_T2(d.l, d.a, d.z);
        CHECK(t1);
        CHECK(t2);
    }
}

TEST_CASE("balanced negatives carry the failing condition") {
    LiePair plane;
    plane.dim = 2;
    plane.labels = {"X", "Y"};
    plane.bracket = BracketTensor(2);
    plane.D = MatQ{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    plane.theta = MatQ::diag({Rat(1), Rat(-1)});

    // no module at all: every central L0 admits (A0, Z0) = (0, 0)
    ModuleData none;
    none.dim = 0;
    none.rho.assign(2, MatQ(0, 0));
    none.gram = none.D = none.theta = MatQ(0, 0);
    Report r1 = balanced_check(plane, none, zero_cocycle(2, 0));
    CHECK(!r1.all_pass());
    CHECK(status_of(r1, "A0", "fail"));
    CHECK(status_of(r1, "B0", "pass"));

    // isotropic alpha image: the projected span degenerates
    ModuleData split;
    split.dim = 2;
    split.labels = {"P", "Q"};
    split.rho.assign(2, MatQ(2, 2));
    split.gram = MatQ::diag({Rat(1), Rat(-1)});
    split.D = MatQ(2, 2);
    split.theta = MatQ::identity(2);
    QuadCocycle ziso = zero_cocycle(2, 2);
    ziso.alpha.set({0, 1}, {Rat(1), Rat(1)});
    Report r2 = balanced_check(plane, split, ziso);
    CHECK(!r2.all_pass());
    CHECK(status_of(r2, "A0", "pass"));
    CHECK(status_of(r2, "B0", "fail"));
}

TEST_CASE("fullness span conditions") {
    auto c2 = cat("tfull-2a");
    auto [t1, t2] = fullness_T1_T2(c2.l, c2.a, c2.z);
    CHECK(t1);
    CHECK(t2);

    auto c4 = cat("tfull-4:k=1,l=0,m=1:c=1:a0=1");
    auto [s1, s2] = fullness_T1_T2(c4.l, c4.a, c4.z);
    CHECK(s1);
    CHECK(s2);

    // alpha = 0 leaves (a^l)+ uncovered
    LiePair plane = c2.l;
    ModuleData line;
    line.dim = 1;
    line.labels = {"A"};
    line.rho.assign(2, MatQ(1, 1));
    line.gram = MatQ{{Rat(1)}};
    line.D = MatQ(1, 1);
    line.theta = MatQ{{Rat(1)}};
    auto [u1, u2] = fullness_T1_T2(plane, line, zero_cocycle(2, 1));
    CHECK(u1);
    CHECK(!u2);
}

TEST_CASE("catalog data matches the printed tables") {
    auto c1 = cat("tfull-1");
    CHECK(c1.l.dim == 0);
    CHECK(c1.a.dim == 2);
    CHECK(c1.a.gram == Rat(-1) * MatQ::identity(2));
    CHECK(c1.a.D == MatQ{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}});

    CHECK(cat("tfull-2a").a.gram == MatQ{{Rat(-1)}});
    CHECK(cat("tfull-2b").a.gram == MatQ{{Rat(1)}});

    auto c3 = cat("tfull-3");
    CHECK(c3.l.dim == 3);
    CHECK(c3.a.dim == 2);
    CHECK(c3.z.alpha.value({0, 2}) == VecQ{Rat(1), Rat(0)});
    CHECK(c3.z.alpha.value({1, 2}) == VecQ{Rat(0), Rat(1)});
    CHECK(c3.z.gamma.is_zero());

    auto c4 = cat("tfull-4:k=0,l=0,m=0:c=1:a0=0");
    CHECK(c4.a.dim == 0);
    CHECK(c4.z.alpha.is_zero());
    CHECK(c4.z.gamma.scalar({0, 1, 2}) == Rat(4));

    // kappa = +1 module of rank one: action table and gram
    auto c5 = cat("tfull-5:k=0,l=0,m=1:c=0:a0=0");
    REQUIRE(c5.a.dim == 4);
    CHECK(c5.a.gram == MatQ::diag({Rat(-1), Rat(1), Rat(-1), Rat(1)}));
    const MatQ &H = c5.a.rho[0], &X = c5.a.rho[1], &Y = c5.a.rho[2];
    auto col = [](const MatQ& m, int j) { return m.col_vec(j); };
    CHECK(col(H, 0) == VecQ{0, 1, 0, 0});   // H(a1) = a2
    CHECK(col(H, 1) == VecQ{1, 0, 0, 0});   // H(a2) = kappa a1
    CHECK(col(H, 2) == VecQ{0, 0, 0, -1});  // H(a3) = -a4
    CHECK(col(H, 3) == VecQ{0, 0, -1, 0});  // H(a4) = -kappa a3
    CHECK(col(X, 0) == VecQ{0, 0, -1, 0});  // X(a1) = -a3
    CHECK(col(X, 1) == VecQ{0, 0, 0, -1});  // X(a2) = -a4
    CHECK(col(X, 2) == VecQ{1, 0, 0, 0});   // X(a3) = a1
    CHECK(col(X, 3) == VecQ{0, 1, 0, 0});   // X(a4) = a2
    CHECK(col(Y, 0) == VecQ{0, 0, 0, 1});   // Y(a1) = a4
    CHECK(col(Y, 1) == VecQ{0, 0, 1, 0});   // Y(a2) = kappa a3
    CHECK(col(Y, 2) == VecQ{0, 1, 0, 0});   // Y(a3) = a2
    CHECK(col(Y, 3) == VecQ{1, 0, 0, 0});   // Y(a4) = kappa a1
}

TEST_CASE("witness checks") {
    auto c3 = cat("tfull-3");
    QuadCochain e = zero_cochain(3, 2);
    CHECK(class_witness_check(c3.z, c3.z, e, c3.l, c3.a));

    for (const Rat& t : {Rat(2), Rat(-1, 3)}) {
        QuadCochain c = heisenberg_cochain(t);
        QuadCocycle zt = cocycle_act(c3.z, c, c3.l, c3.a);
        CHECK(class_witness_check(c3.z, zt, c, c3.l, c3.a));
        CHECK(!class_witness_check(c3.z, zt, e, c3.l, c3.a));
    }

    // distinct gamma levels over su(2) admit no witness; the only invariant
    // cochain there is (0, 0)
    auto z1 = cat("tfull-4:k=0,l=0,m=0:c=1:a0=0");
    auto z2 = cat("tfull-4:k=0,l=0,m=0:c=2:a0=0");
    CHECK(!class_witness_check(z1.z, z2.z, zero_cochain(3, 0), z1.l, z1.a));
    std::mt19937 rng(17);
    QuadCochain crand = rnd_cochain(3, 0, rng);
    CHECK(!class_witness_check(z1.z, z2.z, crand, z1.l, z1.a));

    // identity morphism route
    PairMorphism id{MatQ::identity(3), MatQ::identity(2)};
    CHECK(verify_morphism(c3.l, c3.a, c3.l, c3.a, id).all_pass());
    CHECK(pullback_cocycle(c3.z, id) == c3.z);
    CHECK(class_witness_check(c3.z, c3.l, c3.a, c3.z, c3.l, c3.a, e, id));

    PairMorphism bad{MatQ::identity(3), Rat(2) * MatQ::identity(2)};
    Report rm = verify_morphism(c3.l, c3.a, c3.l, c3.a, bad);
    CHECK(status_of(rm, "U-isometric", "fail"));
    CHECK(!class_witness_check(c3.z, c3.l, c3.a, c3.z, c3.l, c3.a, e, bad));
}

TEST_CASE("descriptor strings") {
    CatalogDescriptor d = parse_descriptor("tfull-4:k=1,l=0,m=2:c=1/2:a0=0");
    CHECK(d.case_id == "4");
    CHECK(d.k == 1);
    CHECK(d.l == 0);
    CHECK(d.m == 2);
    CHECK(d.c == Rat(1, 2));
    CHECK(d.a0 == 0);
    CHECK(format_descriptor(d) == "tfull-4:k=1,l=0,m=2:c=1/2:a0=0");

    for (const std::string& s : {"tfull-1:a0=0", "tfull-2a:a0=3", "tfull-2b:a0=0",
                                 "tfull-3:a0=1", "tfull-5:k=0,l=2,m=0:c=-1:a0=2"}) {
        CAPTURE(s);
        CHECK(format_descriptor(parse_descriptor(s)) == s);
    }
    // omitted segments default to zero
    CHECK(format_descriptor(parse_descriptor("tfull-3")) == "tfull-3:a0=0");
    CHECK(format_descriptor(parse_descriptor("tfull-4")) == "tfull-4:k=0,l=0,m=0:c=0:a0=0");

    for (const std::string& s :
         {"", "tfull-", "tfull-6", "wrong-3", "tfull-3:k=1", "tfull-3:c=2",
          "tfull-4:k=-1,l=0,m=0", "tfull-4:k=1,k=2,m=0", "tfull-4:c=", "tfull-4:c=x",
          "tfull-1:a0=-2", "tfull-3:a0=1:a0=2", "tfull-4:k=1,l=0,m=0:junk"}) {
        CAPTURE(s);
        CHECK_THROWS_AS(parse_descriptor(s), std::invalid_argument);
    }
}

TEST_CASE("datum serialization round trip") {
    for (const std::string& s : {"tfull-2a:a0=1", "tfull-3", "tfull-5:k=1,l=0,m=1:c=3/2:a0=0"}) {
        CAPTURE(s);
        auto d = cat(s);
        Json j = datum_to_json(d.l, d.a, d.z);
        CHECK(j["schema"] == "quadext.v1");
        auto [l2, a2, z2] = datum_from_json(Json::parse(j.dump()));
        CHECK(l2.dim == d.l.dim);
        CHECK(l2.labels == d.l.labels);
        CHECK(l2.bracket == d.l.bracket);
        CHECK(l2.D == d.l.D);
        CHECK(l2.theta == d.l.theta);
        CHECK(a2.dim == d.a.dim);
        CHECK(a2.rho == d.a.rho);
        CHECK(a2.gram == d.a.gram);
        CHECK(z2 == d.z);
    }

    std::mt19937 rng(23);
    QuadCochain c = rnd_cochain(3, 2, rng);
    QuadCochain c2 = cochain_from_json(cochain_to_json(c), 3, 2);
    CHECK(c2 == c);

    auto d = cat("tfull-3");
    Json j = datum_to_json(d.l, d.a, d.z);
    Json wrong = j;
    wrong["schema"] = "algebra.v1";
    CHECK_THROWS_AS(datum_from_json(wrong), std::invalid_argument);
    Json missing = j;
    missing.erase("module");
    CHECK_THROWS_AS(datum_from_json(missing), std::invalid_argument);
    Json badidx = j;
    badidx["cocycle"]["alpha"] = Json::array({Json::array({Json::array({2, 0}),
                                                           Json::array({"1", "0"})})});
    CHECK_THROWS_AS(datum_from_json(badidx), std::invalid_argument);
}
