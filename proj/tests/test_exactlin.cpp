#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exsym/matq.hpp"

#include <random>

using namespace exsym;

TEST_CASE("rational parse and format") {
    CHECK(rat_str(rat_parse("5/10")) == "1/2");
    CHECK(rat_str(rat_parse("-4/2")) == "-2");
    CHECK(rat_str(rat_parse("7")) == "7");
    CHECK(rat_parse("3/-6") == ratio(-1, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("nearest-double conversion") {
    CHECK(rat_to_double(ratio(1, 3)) == 0.3333333333333333);
    CHECK(rat_to_double(ratio(-1, 2)) == -0.5);
    CHECK(rat_to_double(Rat(0)) == 0.0);
    // 1/3 rounds to nearest, not toward zero: the stored double is above 1/3.
    CHECK(rat_to_double(ratio(2, 3)) == 0.6666666666666666);
    Rat huge(mpz_class("1" + std::string(400, '0')));  // 10^400
    CHECK_THROWS_AS(rat_to_double(huge), std::range_error);
    CHECK_THROWS_AS(rat_to_double(-huge), std::range_error);
}

TEST_CASE("solve: frozen example") {
    MatQ a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto x = solve_vec(a, VecQ{Rat(5), Rat(6)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(-4));
    CHECK((*x)[1] == ratio(9, 2));
}

TEST_CASE("nullspace: frozen example") {
    MatQ a{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    MatQ n = nullspace(a);
    REQUIRE(n.cols() == 1);
    // basis vector proportional to (2, -1)
    CHECK(n(0, 0) * Rat(-1) == n(1, 0) * Rat(2));
    CHECK_FALSE(n.col_vec(0) == VecQ(2));
    CHECK((a * n).is_zero());
}

TEST_CASE("inconsistent system") {
    MatQ a{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(solve_vec(a, VecQ{Rat(1), Rat(1)}).has_value());
}

TEST_CASE("rank nullity and inverse round trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5), m = 1 + static_cast<int>(rng() % 5);
        MatQ a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = d(rng);
        int r = rank(a);
        MatQ ns = nullspace(a);
        CHECK(r + ns.cols() == m);
        CHECK((a * ns).is_zero());
        CHECK(rank(a.transpose()) == r);
        if (n == m && r == n) {
            auto inv = inverse(a);
            REQUIRE(inv.has_value());
            CHECK((*inv) * a == MatQ::identity(n));
        }
    }
}

TEST_CASE("span operations") {
    MatQ e1 = MatQ::col({Rat(1), Rat(0), Rat(0)});
    MatQ e12{{Rat(1), Rat(1)}, {Rat(0), Rat(2)}, {Rat(0), Rat(0)}};
    MatQ e23{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
    CHECK(span_contains(e12, e1));
    CHECK_FALSE(span_contains(e1, e12));
    CHECK(span_equal(column_space(MatQ::hcat(e12, e12)), e12));
    MatQ meet = span_intersect(e12, e23);
    REQUIRE(meet.cols() == 1);
    CHECK(meet(0, 0) == 0);
    CHECK(meet(2, 0) == 0);
    CHECK(meet(1, 0) != 0);
    CHECK(span_equal(span_sum(e12, e23), MatQ::identity(3)));
}

TEST_CASE("inertia: diagonal and congruence invariance") {
    MatQ g = MatQ::diag({Rat(2), Rat(-3), Rat(0), ratio(1, 7)});
    auto [neg, pos] = inertia(g);
    CHECK(neg == 1);
    CHECK(pos == 2);

    // hyperbolic plane: all-zero diagonal
    MatQ h{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(inertia(h) == std::pair<int, int>(1, 1));

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        MatQ s(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s(i, j) = s(j, i) = d(rng);
        MatQ c(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) c(i, j) = d(rng);
        } while (rank(c) != n);
        CHECK(inertia(c.transpose() * s * c) == inertia(s));
    }
}

TEST_CASE("determinant") {
    MatQ a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(det(a) == Rat(-2));
    CHECK(det(MatQ::identity(4)) == Rat(1));
    MatQ sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(det(sing) == Rat(0));
}
