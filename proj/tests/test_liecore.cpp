#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exsym/algebra_json.hpp"
#include "exsym/filtration.hpp"
#include "exsym/structure.hpp"

using namespace exsym;

namespace {

// abelian R^2, gram Id, D = rotation generator, theta = diag(1,-1)
Algebra plane() {
    Algebra g;
    g.dim = 2;
    g.labels = {"X", "Y"};
    g.bracket = BracketTensor(2);
    g.gram = MatQ::identity(2);
    g.D = MatQ{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    g.theta = MatQ::diag({Rat(1), Rat(-1)});
    return g;
}

// su(2) (kappa = -1): [H,X] = 2Y, [H,Y] = -2X, [X,Y] = 2H; basis (H,X,Y)
BracketTensor su2_bracket() {
    BracketTensor b(3);
    b.set(0, 1, {Rat(0), Rat(0), Rat(2)});
    b.set(0, 2, {Rat(0), Rat(-2), Rat(0)});
    b.set(1, 2, {Rat(2), Rat(0), Rat(0)});
    return b;
}

// sl(2,R) (kappa = +1): [H,X] = 2Y, [H,Y] = 2X, [X,Y] = 2H
BracketTensor sl2_bracket() {
    BracketTensor b(3);
    b.set(0, 1, {Rat(0), Rat(0), Rat(2)});
    b.set(0, 2, {Rat(0), Rat(2), Rat(0)});
    b.set(1, 2, {Rat(2), Rat(0), Rat(0)});
    return b;
}

// h(1): [X,Y] = Z; D(X) = Y, D(Y) = -X, D(Z) = 0; l_+ = span{X}
Algebra heisenberg() {
    Algebra g;
    g.dim = 3;
    g.labels = {"X", "Y", "Z"};
    g.bracket = BracketTensor(3);
    g.bracket.set(0, 1, {Rat(0), Rat(0), Rat(1)});
    g.gram = MatQ(3, 3);  // h(1) has no invariant nondegenerate metric
    g.weak = true;
    g.D = MatQ{{Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
    g.theta = MatQ::diag({Rat(1), Rat(-1), Rat(-1)});
    return g;
}

Algebra su2_equivariant() {
    Algebra g;
    g.dim = 3;
    g.labels = {"H", "X", "Y"};
    g.bracket = su2_bracket();
    g.gram = Rat(8) * MatQ::identity(3);  // -Killing
    // D = (1/2) ad(X): D(H) = -Y, D(X) = 0, D(Y) = H
    g.D = MatQ{{Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}};
    g.theta = MatQ::diag({Rat(1), Rat(-1), Rat(-1)});
    return g;
}

}  // namespace

TEST_CASE("verify_algebra: abelian plane passes") {
    Report r = verify_algebra(plane());
    CHECK(r.all_pass());
    CHECK(r.find("h-graded")->status == "pass");
}

TEST_CASE("verify_algebra: h(1) with case-3 equivariant structure passes") {
    Report r = verify_algebra(heisenberg());
    CHECK(r.all_pass());
    CHECK(r.find("gram-nondegenerate")->status == "skip");
}

TEST_CASE("verify_algebra: su(2) with D = ad(X)/2 passes") {
    CHECK(verify_algebra(su2_equivariant()).all_pass());
}

TEST_CASE("jacobi defect: [X,Y]=Z, [X,Z]=X fails with defect -Z") {
    Algebra g;
    g.dim = 3;
    g.labels = {"X", "Y", "Z"};
    g.bracket = BracketTensor(3);
    g.bracket.set(0, 1, {Rat(0), Rat(0), Rat(1)});
    g.bracket.set(0, 2, {Rat(1), Rat(0), Rat(0)});
    g.gram = MatQ(3, 3);
    g.weak = true;
    g.D = MatQ(3, 3);
    g.theta = MatQ::identity(3);
    VecQ d = jacobi_defect(g.bracket, 0, 1, 2);
    CHECK(d == VecQ{Rat(0), Rat(0), Rat(-1)});
    Report r = verify_algebra(g);
    CHECK_FALSE(r.all_pass());
    CHECK(r.find("jacobi")->status == "fail");
}

TEST_CASE("grade: rotation plane") {
    Grading gr = grade(plane());
    CHECK(gr.tau == -MatQ::identity(2));
    CHECK(gr.pp.cols() == 0);
    CHECK(gr.mp.cols() == 0);
    REQUIRE(gr.pm.cols() == 1);
    REQUIRE(gr.mm.cols() == 1);
    CHECK(gr.pm(0, 0) != 0);  // g_+^- = span{X}
    CHECK(gr.pm(1, 0) == 0);
    CHECK(gr.mm(0, 0) == 0);  // g_-^- = span{Y}
}

TEST_CASE("grade: D = 0 gives g^- = 0") {
    Algebra g = plane();
    g.D = MatQ(2, 2);
    Grading gr = grade(g);
    CHECK(gr.tau == MatQ::identity(2));
    CHECK(gr.tau_minus().cols() == 0);
    CHECK(gr.tau_plus().cols() == 2);
}

TEST_CASE("grade: su(2) tau-split is X vs {H,Y}") {
    Grading gr = grade(su2_equivariant());
    MatQ x = MatQ::col({Rat(0), Rat(1), Rat(0)});
    CHECK(span_equal(gr.tau_plus(), x));
    CHECK(gr.tau_minus().cols() == 2);
    CHECK_FALSE(span_contains(gr.tau_minus(), x));
}

TEST_CASE("grade rejects non-h-graded D") {
    Algebra g = plane();
    g.D = MatQ{{Rat(0), Rat(-2)}, {Rat(2), Rat(0)}};  // D^3 = -4D
    CHECK((g.D * g.D * g.D) == Rat(-4) * g.D);
    CHECK_THROWS_AS(grade(g), std::domain_error);
}

TEST_CASE("is_extrinsic_triple and is_full on abelian examples") {
    // abelian with g_+^+ != 0: extrinsic fails
    Algebra g;
    g.dim = 1;
    g.labels = {"A"};
    g.bracket = BracketTensor(1);
    g.gram = MatQ::identity(1);
    g.D = MatQ(1, 1);
    g.theta = MatQ::identity(1);
    CHECK_FALSE(is_extrinsic_triple(g).holds);

    // abelian with g = g^-: full, both sides zero
    Algebra p = plane();
    CHECK(is_extrinsic_triple(p).holds);
    CHECK(is_full(p).holds);
}

TEST_CASE("direct_sum grades blockwise and split_check detects the split") {
    Algebra a = plane(), b = plane();
    Algebra s = direct_sum(a, b);
    CHECK(verify_algebra(s).all_pass());
    Grading gs = grade(s), ga = grade(a);
    CHECK(gs.pm.cols() == 2 * ga.pm.cols());
    CHECK(gs.mm.cols() == 2 * ga.mm.cols());
    CHECK(split_check(s, {0, 1}));
    CHECK(split_check(s, {2, 3}));
    // both cut through a D-orbit: D maps X into the dropped Y direction
    CHECK_FALSE(split_check(s, {0}));
    CHECK_FALSE(split_check(s, {0, 2}));
}

TEST_CASE("radical filtration") {
    Filtration f = radical_filtration(plane().bracket);
    CHECK(f.algebra_class == "abelian");
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[1].cols() == 0);

    Filtration h = radical_filtration(heisenberg().bracket);
    CHECK(h.algebra_class == "nilpotent");
    REQUIRE(h.terms.size() == 3);
    CHECK(h.terms[1].cols() == 1);
    CHECK(h.terms[1](2, 0) != 0);  // R_1 = span{Z}
    CHECK(h.terms[2].cols() == 0);

    CHECK(radical_filtration(su2_bracket()).algebra_class == "semisimple");
    CHECK(radical_filtration(sl2_bracket()).algebra_class == "semisimple");

    // reductive: su(2) + center
    BracketTensor red(4);
    red.set(0, 1, {Rat(0), Rat(0), Rat(2), Rat(0)});
    red.set(0, 2, {Rat(0), Rat(-2), Rat(0), Rat(0)});
    red.set(1, 2, {Rat(2), Rat(0), Rat(0), Rat(0)});
    Filtration r = radical_filtration(red);
    CHECK(r.algebra_class == "reductive");
    CHECK(r.terms[1].cols() == 0);

    // solvable non-nilpotent: unsupported
    BracketTensor solv(2);
    solv.set(0, 1, {Rat(0), Rat(1)});
    CHECK_THROWS_AS(radical_filtration(solv), UnsupportedError);
}

TEST_CASE("killing forms of su(2) and sl(2,R)") {
    CHECK(killing_form(su2_bracket()) == Rat(-8) * MatQ::identity(3));
    CHECK(killing_form(sl2_bracket()) == MatQ::diag({Rat(8), Rat(-8), Rat(8)}));
}

TEST_CASE("tau is an isometric involution whenever D is h-graded antisymmetric") {
    Algebra g = su2_equivariant();
    Grading gr = grade(g);
    CHECK(gr.tau * gr.tau == MatQ::identity(3));
    CHECK(gr.tau.transpose() * g.gram * gr.tau == g.gram);
}

TEST_CASE("algebra JSON round trip") {
    Algebra g = su2_equivariant();
    Json j = algebra_to_json(g);
    CHECK(j["schema"] == "algebra.v1");
    Algebra back = algebra_from_json(j);
    CHECK(back.dim == g.dim);
    CHECK(back.labels == g.labels);
    CHECK(back.bracket == g.bracket);
    CHECK(back.gram == g.gram);
    CHECK(back.D == g.D);
    CHECK(back.theta == g.theta);
    CHECK(algebra_to_json(back) == j);  // byte-stable representation

    Json bad = j;
    bad.erase("gram");
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
    bad = j;
    bad["bracket"][0][0] = 5;  // i >= j
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
    bad = j;
    bad["gram"][0][0] = "1/0";
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
}
