#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <random>

#include "exsym/extension.hpp"
#include "exsym/geom.hpp"
#include "exsym/grading.hpp"

using namespace exsym;

namespace {

int idx(const Algebra& g, const std::string& label) {
    for (int i = 0; i < g.dim; ++i)
        if (g.labels[static_cast<std::size_t>(i)] == label) return i;
    REQUIRE(false);
    return -1;
}

Algebra built(const std::string& descriptor) {
    const CatalogData cd = catalog(parse_descriptor(descriptor));
    return build_extension(cd.l, cd.a, cd.z);
}

VecQ unit_q(int dim, int i) {
    VecQ x(static_cast<std::size_t>(dim), Rat(0));
    x[static_cast<std::size_t>(i)] = 1;
    return x;
}

double max_abs(const MatD& m) { return m.cwiseAbs().maxCoeff(); }

// antisymmetry of the generator with respect to the ambient gram
double skew_defect(const AffineGenerator& gen) {
    return max_abs(gen.linear.transpose() * gen.gram + gen.gram * gen.linear);
}

}  // namespace

TEST_CASE("phi_rep restricts the exact action to the reflected part") {
    SUBCASE("invariant vectors with trivial differential translate by zero") {
        const Algebra g = built("tfull-4:k=1,l=0,m=0");
        const AffineGenerator gen = phi_rep(g, unit_q(g.dim, idx(g, "a3_1_X")));
        CHECK(gen.translation.cwiseAbs().maxCoeff() == 0.0);
        CHECK(skew_defect(gen) <= 1e-12);
    }

    SUBCASE("slot generator of the smallest family is a pure translation") {
        const Algebra g = built("tfull-1");
        const AffineGenerator gen = phi_rep(g, unit_q(g.dim, idx(g, "A1")));
        REQUIRE(gen.translation.size() == 1);
        CHECK(gen.linear.cwiseAbs().maxCoeff() == 0.0);
        CHECK(gen.translation(0) == -1.0);  // minus basis is (A2), image of -D
    }

    SUBCASE("nilpotent family generator moves the chain Y -> A0 -> sigma_Y") {
        const Algebra g = built("tfull-2a");
        const AffineGenerator gen = phi_rep(g, unit_q(g.dim, idx(g, "X")));
        // minus coordinates: (sigma_Y, A0, Y)
        REQUIRE(gen.linear.rows() == 3);
        CHECK(gen.linear(1, 2) == 1.0);
        CHECK(gen.linear(0, 1) == 1.0);
        CHECK(gen.linear(2, 2) == 0.0);
        CHECK(gen.translation(2) == -1.0);
        CHECK(skew_defect(gen) <= 1e-12);
    }

    SUBCASE("vectors outside the fixed part are rejected") {
        const Algebra g = built("tfull-2a");
        CHECK_THROWS_AS(phi_rep(g, unit_q(g.dim, idx(g, "Y"))), std::invalid_argument);
        CHECK_THROWS_AS(phi_rep(g, VecQ(2, Rat(1))), std::invalid_argument);
    }
}

TEST_CASE("exp_affine is a gram-preserving one-parameter group") {
    const Algebra g = built("tfull-4:c=1");
    const AffineGenerator gen = phi_rep(g, unit_q(g.dim, idx(g, "H")));

    SUBCASE("group law and isometry") {
        const AffineIsometry a = exp_affine(gen, 0.7);
        const AffineIsometry b = exp_affine(gen, -0.3);
        const AffineIsometry ab = a.after(b);
        const AffineIsometry c = exp_affine(gen, 0.4);
        CHECK(max_abs(ab.linear - c.linear) <= 1e-9);
        CHECK((ab.translation - c.translation).cwiseAbs().maxCoeff() <= 1e-9);
        CHECK(a.isometry_defect() <= 1e-9);
        CHECK(ab.isometry_defect() <= 1e-9);
        const VecD p = VecD::LinSpaced(a.translation.size(), -1.0, 1.0);
        CHECK((ab.apply(p) - a.apply(b.apply(p))).cwiseAbs().maxCoeff() <= 1e-12);
    }

    SUBCASE("time zero is the identity") {
        const AffineIsometry e = exp_affine(gen, 0.0);
        CHECK(max_abs(e.linear - MatD::Identity(e.linear.rows(), e.linear.cols())) == 0.0);
        CHECK(e.translation.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("nilpotent generators exponentiate to their terminating series") {
        const Algebra n = built("tfull-2a");
        const AffineGenerator gn = phi_rep(n, unit_q(n.dim, idx(n, "X")));
        const MatD a = gn.linear;
        CHECK(max_abs(a * a * a) == 0.0);
        for (double t : {0.5, -2.0}) {
            const AffineIsometry e = exp_affine(gn, t);
            const MatD lin = MatD::Identity(3, 3) + t * a + (t * t / 2.0) * a * a;
            const VecD tr = t * gn.translation + (t * t / 2.0) * (a * gn.translation) +
                            (t * t * t / 6.0) * (a * a * gn.translation);
            CHECK(max_abs(e.linear - lin) <= 1e-12);
            CHECK((e.translation - tr).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }

    SUBCASE("zero linear part gives a plain translation") {
        AffineGenerator tg{MatD::Zero(2, 2), VecD::Ones(2), MatD::Identity(2, 2)};
        const AffineIsometry e = exp_affine(tg, 0.25);
        CHECK(max_abs(e.linear - MatD::Identity(2, 2)) == 0.0);
        CHECK((e.translation - VecD::Constant(2, 0.25)).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("orbit words act leftmost-last and start at the origin") {
    const Algebra g = built("tfull-4:k=1,l=0,m=0");
    CHECK(orbit_point(g, {}).cwiseAbs().maxCoeff() == 0.0);

    // [a3_1_X, a3_1_Y] lands on sigma_H, so these factors do not commute
    const int ax = idx(g, "a3_1_X"), ay = idx(g, "a3_1_Y");
    const std::vector<WordFactor> w{{{{ax, 0.5}}}, {{{ay, 1.0}}}};
    const std::vector<WordFactor> wr{{{{ay, 1.0}}}, {{{ax, 0.5}}}};
    const VecD p = orbit_point(g, w);
    const VecD pr = orbit_point(g, wr);
    const AffineIsometry outer = exp_affine(phi_rep(g, unit_q(g.dim, ax)), 0.5);
    const AffineIsometry inner = exp_affine(phi_rep(g, unit_q(g.dim, ay)), 1.0);
    CHECK((p - outer.apply(inner.apply(VecD::Zero(p.size())))).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((p - pr).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("closed form samplers evaluate the printed parametrizations") {
    SUBCASE("example points") {
        VecD p2(2);
        p2 << 1.0, 2.0;
        const VecD q2 = closed_form_embed(2, p2);
        CHECK(q2(0) == 1.0);
        CHECK(q2(1) == 4.0);
        CHECK(q2(2) == 2.0);

        CHECK(closed_form_embed(3, VecD::Zero(3)).cwiseAbs().maxCoeff() == 0.0);
        VecD p3(3);
        p3 << 2.0, 0.5, -1.0;
        const VecD q3 = closed_form_embed(3, p3);
        CHECK(q3(0) == 0.5);
        CHECK(q3(1) == doctest::Approx(6.0));  // -rt + r^4/4 = 2 + 4
        CHECK(q3(2) == -1.0);
        CHECK(q3(3) == 2.0);
        CHECK(q3(4) == 4.0);

        CHECK(closed_form_embed(4, VecD::Zero(2), 0, 0, 0, 1.0).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(closed_form_embed(5, VecD::Zero(2), 0, 0, 0, 1.0).cwiseAbs().maxCoeff() <= 1e-15);
    }

    SUBCASE("parameter dimensions follow the item") {
        CHECK(closed_form_sampler(1).param_dim == 1);
        CHECK(closed_form_sampler(2).param_dim == 2);
        CHECK(closed_form_sampler(3).param_dim == 3);
        CHECK(closed_form_sampler(4, 1, 1, 1, 0.0).param_dim == 5);
        CHECK(closed_form_sampler(5, 2, 0, 1, 0.0).param_dim == 5);
        CHECK_THROWS_AS(closed_form_embed(2, VecD::Zero(3)), std::invalid_argument);
    }

    SUBCASE("ambient grams carry the printed inner products") {
        const EmbeddingSampler s2 = closed_form_sampler(2, 0, 0, 0, 0.0, -1);
        CHECK(s2.gram(0, 2) == 1.0);
        CHECK(s2.gram(2, 0) == 1.0);
        CHECK(s2.gram(1, 1) == -1.0);
        CHECK(s2.gram(0, 0) == 0.0);

        const EmbeddingSampler s5 = closed_form_sampler(5, 0, 1, 0, 0.0);
        // the hatted columns flip sign relative to item 4
        CHECK(s5.gram(3, 3) == -1.0);
        CHECK(closed_form_sampler(4, 0, 1, 0, 0.0).gram(3, 3) == 1.0);
    }
}

TEST_CASE("orbit exponentials land on the printed embeddings") {
    SUBCASE("two-factor words of the smallest indecomposable family") {
        const CaseFrame cf = case_frame(parse_descriptor("tfull-4:c=1"));
        // frame is the identity here, so ambient coordinates match directly
        const int h = idx(cf.g, "H"), sh = idx(cf.g, "sigma_H");
        for (double r : {0.0, 0.8, -1.5})
            for (double t : {0.0, 0.6}) {
                const VecD via_word =
                    orbit_point(cf.g, {{{{h, r / 2.0}}}, {{{sh, t}}}});
                VecD params(2);
                params << r, t;
                const VecD printed = closed_form_embed(4, params, 0, 0, 0, 1.0);
                CHECK((via_word - printed).cwiseAbs().maxCoeff() <= 1e-12);
            }
    }

    SUBCASE("matched grids for every printed family") {
        const std::vector<std::string> descriptors{
            "tfull-1",
            "tfull-2a",
            "tfull-2b",
            "tfull-3",
            "tfull-4:k=1,l=1,m=1:c=1",
            "tfull-5:k=1,l=1,m=1:c=-1/2",
        };
        for (const std::string& dsc : descriptors) {
            CAPTURE(dsc);
            const CaseFrame cf = case_frame(parse_descriptor(dsc));
            double dev = 0.0;
            for (const VecD& p : parameter_grid(cf.closed.param_dim, -1.0, 1.0, 3))
                dev = std::max(dev, (cf.closed.eval(p) - cf.orbit.eval(p)).cwiseAbs().maxCoeff());
            CHECK(dev <= 1e-8);
        }
    }

    SUBCASE("slot pairs have no printed parametrization") {
        CHECK_THROWS_AS(case_frame(parse_descriptor("tfull-1:a0=1")), std::invalid_argument);
    }
}

TEST_CASE("induced metrics have the printed signatures") {
    VecD p1(1), p2(2);
    p1 << 0.4;
    p2 << 0.3, -0.7;

    const MetricSample line = induced_metric(closed_form_sampler(1), p1);
    CHECK(line.n_minus == 1);
    CHECK(line.n_plus == 0);

    for (int sign2 : {1, -1}) {
        const MetricSample m2 = induced_metric(closed_form_sampler(2, 0, 0, 0, 0.0, sign2), p2);
        CHECK(m2.n_minus == 1);
        CHECK(m2.n_plus == 1);
        CHECK(max_abs(m2.induced - m2.induced.transpose()) == 0.0);
    }

    const MetricSample m4 =
        induced_metric(closed_form_sampler(4, 1, 1, 1, 1.0), VecD::Constant(5, 0.2));
    CHECK(m4.n_minus == 1);
    CHECK(m4.n_plus == 4);

    SUBCASE("degenerate pullbacks are refused") {
        EmbeddingSampler deg;
        deg.tag = "degenerate-line";
        deg.ambient_dim = 2;
        deg.param_dim = 1;
        deg.gram = MatD(2, 2);
        deg.gram << 1.0, 0.0, 0.0, -1.0;
        deg.eval = [](const VecD& p) {
            VecD q(2);
            q << p(0), p(0);
            return q;
        };
        CHECK_THROWS_AS(induced_metric(deg, VecD::Zero(1)), GeomError);
    }
}

TEST_CASE("mean curvature matches the closed trace formula") {
    SUBCASE("minimal families") {
        for (int item : {1, 2, 3}) {
            const EmbeddingSampler s = closed_form_sampler(item);
            const VecD p = VecD::Constant(s.param_dim, 0.3);
            const MetricSample m = second_fundamental_and_mean_curvature(s, p);
            CAPTURE(item);
            CHECK(m.mean_curvature.cwiseAbs().maxCoeff() <= 1e-6);
        }
    }

    SUBCASE("the trace constant of the exponential families") {
        // C = -(4 + 2(k+l) + m) / (2 + k + l + m), along the first null
        // direction; sampled at the origin where that direction is a
        // coordinate axis (elsewhere the transvections rotate it)
        const EmbeddingSampler s4 = closed_form_sampler(4, 0, 0, 1, 0.0);
        const MetricSample m4 = second_fundamental_and_mean_curvature(s4, VecD::Zero(3));
        CHECK(m4.mean_curvature(0) == doctest::Approx(-5.0 / 3.0).epsilon(1e-4));
        VecD rest4 = m4.mean_curvature;
        rest4(0) = 0.0;
        CHECK(rest4.cwiseAbs().maxCoeff() <= 1e-4);

        const EmbeddingSampler s5 = closed_form_sampler(5, 1, 0, 0, 0.0);
        const MetricSample m5 = second_fundamental_and_mean_curvature(s5, VecD::Zero(3));
        CHECK(m5.mean_curvature(0) == doctest::Approx(-2.0).epsilon(1e-4));
    }

    SUBCASE("normal frames are gram-orthogonal to the tangent space") {
        const EmbeddingSampler s = closed_form_sampler(4, 0, 0, 1, 1.0);
        const VecD p = VecD::Constant(3, 0.2);
        const MetricSample m = second_fundamental_and_mean_curvature(s, p);
        const MatD j = fd_jacobian(s.eval, p);
        CHECK(max_abs(j.transpose() * s.gram * m.normal_frame) <= 1e-6);
    }
}

TEST_CASE("normal reflections fix the manifolds") {
    SUBCASE("paraboloid model reflects to negated parameters") {
        // at the origin the reflection is (x1,x2,x3) -> (-x1,x2,-x3)
        const EmbeddingSampler s = closed_form_sampler(2);
        VecD rs(2), neg(2);
        rs << 0.6, -0.4;
        neg << -0.6, 0.4;
        VecD reflected = s.eval(rs);
        reflected(0) = -reflected(0);
        reflected(2) = -reflected(2);
        CHECK((reflected - s.eval(neg)).cwiseAbs().maxCoeff() <= 1e-15);

        std::vector<VecD> probes;
        for (const VecD& p : parameter_grid(2, -1.0, 1.0, 3)) probes.push_back(p);
        const ReflectionResult r = normal_reflection_test(s, VecD::Zero(2), probes);
        CHECK(r.all_converged);
        CHECK(r.max_residual <= 1e-10);
    }

    SUBCASE("a line is its own reflection") {
        std::vector<VecD> probes{VecD::Constant(1, -1.0), VecD::Constant(1, 0.5),
                                 VecD::Constant(1, 2.0)};
        const ReflectionResult r =
            normal_reflection_test(closed_form_sampler(1), VecD::Constant(1, 0.2), probes);
        CHECK(r.all_converged);
        CHECK(r.max_residual <= 1e-12);
    }

    SUBCASE("random probes on an exponential family") {
        const EmbeddingSampler s = closed_form_sampler(4, 0, 0, 1, 1.0);
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        std::vector<VecD> probes;
        for (int i = 0; i < 50; ++i) {
            VecD p(3);
            for (int j = 0; j < 3; ++j) p(j) = coef(rng);
            probes.push_back(p);
        }
        const ReflectionResult r = normal_reflection_test(s, VecD::Constant(3, 0.05), probes);
        CHECK(r.all_converged);
        CHECK(r.max_residual <= 1e-6);
    }

    SUBCASE("residuals shrink at least quadratically on an asymmetric surface") {
        EmbeddingSampler s;
        s.tag = "cubic-bump";
        s.ambient_dim = 3;
        s.param_dim = 2;
        s.gram = MatD::Zero(3, 3);
        s.gram(0, 2) = s.gram(2, 0) = 1.0;
        s.gram(1, 1) = 1.0;
        s.eval = [](const VecD& p) {
            VecD q(3);
            q << p(0), p(1) * p(1) + p(1) * p(1) * p(1), p(1);
            return q;
        };
        double prev = -1.0;
        for (double radius : {0.4, 0.2, 0.1}) {
            VecD probe(2);
            probe << 0.0, radius;
            const ReflectionResult r = normal_reflection_test(s, VecD::Zero(2), {probe});
            REQUIRE(r.all_converged);
            if (prev >= 0.0) CHECK(r.max_residual <= prev / 3.0);
            prev = r.max_residual;
        }
        CHECK(prev <= 3e-3);
    }
}

TEST_CASE("curvature probes certify flatness and parallelism") {
    VecD p2(2);
    p2 << 0.2, 0.3;
    const CurvatureReport flat2 = curvature_probe(closed_form_sampler(2), p2);
    CHECK(flat2.flat);
    CHECK(flat2.stable);

    const CurvatureReport flat4 =
        curvature_probe(closed_form_sampler(4, 0, 1, 0, 1.0), VecD::Constant(3, 0.2));
    CHECK(flat4.flat);

    const CurvatureReport wave4 =
        curvature_probe(closed_form_sampler(4, 0, 0, 1, 1.0), VecD::Constant(3, 0.1));
    CHECK_FALSE(wave4.flat);
    CHECK(wave4.max_riemann >= 10.0 * kFlatTol);
    CHECK(wave4.parallel);
    CHECK(wave4.stable);

    const CurvatureReport wave5 =
        curvature_probe(closed_form_sampler(5, 1, 0, 0, 1.0), VecD::Constant(3, 0.1));
    CHECK_FALSE(wave5.flat);
    CHECK(wave5.parallel);
}

TEST_CASE("the difference stack agrees with a forward-difference reference") {
    const EmbeddingSampler s = closed_form_sampler(3);
    VecD p(3);
    p << 0.3, -0.2, 0.5;
    const MatD j = fd_jacobian(s.eval, p);
    MatD fwd(s.ambient_dim, s.param_dim);
    const double h = 1e-6;
    for (int c = 0; c < s.param_dim; ++c) {
        VecD q = p;
        q(c) += h;
        fwd.col(c) = (s.eval(q) - s.eval(p)) / h;
    }
    CHECK(max_abs(j - fwd) <= 1e-4);
}

TEST_CASE("point clouds export deterministically") {
    const EmbeddingSampler s = closed_form_sampler(2);
    const std::vector<VecD> grid = parameter_grid(2, -1.0, 1.0, 3);
    REQUIRE(grid.size() == 9);
    CHECK(grid.front()(0) == -1.0);
    CHECK(grid.front()(1) == -1.0);
    CHECK(grid[1](0) == -1.0);  // row-major: last axis varies fastest
    CHECK(grid[1](1) == 0.0);
    CHECK(grid.back()(0) == 1.0);

    const std::string csv = cloud_csv(s, grid);
    CHECK(csv == cloud_csv(s, grid));
    CHECK(csv.rfind("# tag:", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);  // 2 comments + header + 9 rows

    const std::string js = cloud_json(s, grid);
    CHECK(js == cloud_json(s, grid));
    const auto parsed = nlohmann::json::parse(js);
    CHECK(parsed.at("rows").size() == 9);
    CHECK(parsed.at("ambient_dim").get<int>() == 3);
    CHECK(parsed.at("param_dim").get<int>() == 2);
}

TEST_CASE("composed orbit isometries stay isometric") {
    const CaseFrame cf = case_frame(parse_descriptor("tfull-4:k=1,l=1,m=1:c=1"));
    const VecD p = VecD::Constant(5, 0.7);
    const AffineIsometry w = orbit_isometry(cf.g, cf.word(p));
    CHECK(w.isometry_defect() <= 1e-10);
}
