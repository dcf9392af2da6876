#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staircase/series.hpp"

using namespace staircase;

TEST_CASE("polynomial ring basics") {
    IntPoly a;
    a.c = {BigInt(1), BigInt(2)};
    IntPoly b;
    b.c = {BigInt(0), BigInt(1)};
    IntPoly p = a * b;  // (1+2v)v = v + 2v^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1) == BigInt(1));
    CHECK(p.coeff(2) == BigInt(2));
    CHECK((a - a).degree() == -1);
    CHECK(a.eval_at_one() == BigInt(3));
    CHECK(a.derivative().coeff(0) == BigInt(2));
}

TEST_CASE("series arithmetic and reciprocal") {
    IntSeries one = IntSeries::one(10);
    IntSeries geom = one;
    for (int i = 1; i <= 10; ++i) geom.a[static_cast<size_t>(i)] = 1;
    IntSeries r = geom.reciprocal();  // 1 - z
    CHECK(r.coeff(0) == BigInt(1));
    CHECK(r.coeff(1) == BigInt(-1));
    for (int i = 2; i <= 10; ++i) CHECK(r.coeff(i) == BigInt(0));
    CHECK(geom * r == one);
    CHECK(geom.shifted_z(2).coeff(2) == BigInt(1));
    CHECK(geom.shifted_z(2).coeff(1) == BigInt(0));
}

TEST_CASE("domino counting series") {
    IntSeries s = domino_count_series(9);
    long expected[] = {1, 2, 6, 22, 91, 408, 1938, 9614, 49335, 260130};
    for (int n = 0; n <= 9; ++n) {
        CHECK(s.coeff(n) == BigInt(expected[n]));
        CHECK(domino_count_formula(n) == BigInt(expected[n]));
    }
}

TEST_CASE("the quadratic candidate fails but the cubic holds") {
    IntSeries s = domino_count_series(20);
    CHECK(!check_minimal_polynomial(s, domino_quadratic_candidate()));
    CHECK(check_minimal_polynomial(s, domino_minimal_cubic()));
}

TEST_CASE("marked series reduce to the plain one at mark 1") {
    int N = 12;
    IntSeries plain = domino_count_series(N);
    for (const MarkedSeries& m :
         {leaf_marked_series(N), strip_marked_series(N), split_marked_series(N)}) {
        for (int n = 0; n <= N; ++n) CHECK(m.coeff(n).eval_at_one() == plain.coeff(n));
    }
}

TEST_CASE("moment series satisfy their cubics") {
    MarkedSeries leaves = leaf_marked_series(16);
    CHECK(check_minimal_polynomial(mark_derivative_at_one(leaves, 1), leaf_total_cubic()));
    MarkedSeries strips = strip_marked_series(16);
    CHECK(check_minimal_polynomial(mark_derivative_at_one(strips, 1), strip_total_cubic()));
    MarkedSeries leaves14 = leaf_marked_series(14);
    CHECK(check_minimal_polynomial(mark_derivative_at_one(leaves14, 2), leaf_second_moment_cubic()));
    MarkedSeries strips14 = strip_marked_series(14);
    CHECK(check_minimal_polynomial(mark_derivative_at_one(strips14, 2), strip_second_moment_cubic()));
}

TEST_CASE("first moments match the closed forms") {
    MarkedSeries leaves = leaf_marked_series(10);
    IntSeries lt = mark_derivative_at_one(leaves, 1);
    MarkedSeries strips = strip_marked_series(10);
    IntSeries st = mark_derivative_at_one(strips, 1);
    for (int n = 1; n <= 10; ++n) {
        CHECK(lt.coeff(n) == leaf_total_formula(n));
        CHECK(st.coeff(n) == strip_total_formula(n));
    }
}

TEST_CASE("expectations are total over count") {
    for (int n = 1; n <= 8; ++n) {
        Rational l(leaf_total_formula(n), domino_count_formula(n));
        l.canonicalize();
        Rational e(strip_total_formula(n), domino_count_formula(n));
        e.canonicalize();
        CHECK(expected_leaves(n) == l);
        CHECK(expected_empty_strips(n) == e);
    }
}

TEST_CASE("split series row sums and symmetric entries") {
    MarkedSeries split = split_marked_series(28);
    for (int n = 0; n <= 28; ++n) {
        BigInt row = 0;
        for (int t = 0; t <= n; ++t) row += split.coeff(n).coeff(t);
        CHECK(row == domino_count_formula(n));
    }
    CHECK(split.coeff(28).coeff(14) == BigInt("13783027749444297852"));
}

TEST_CASE("solver rejects nonsense orders") {
    CHECK_THROWS(domino_count_series(-1));
}
