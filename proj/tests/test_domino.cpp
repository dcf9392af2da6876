#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staircase/domino.hpp"
#include "staircase/series.hpp"

using namespace staircase;

TEST_CASE("validity: cells and the global pattern") {
    // threshold splits values; top >= r avoids 213, bottom < r avoids 132
    Domino d{Permutation::from_text("2134"), 3};
    CHECK(d.top_cell() == Permutation::from_text("12"));  // values 3,4 in order 3,4
    CHECK(d.bottom_cell() == Permutation::from_text("21"));
    CHECK(d.valid());
    CHECK(!Domino{Permutation::from_text("1324"), 1}.valid());   // global 1324
    CHECK(!Domino{Permutation::from_text("213"), 1}.valid());    // top contains 213
    CHECK(!Domino{Permutation::from_text("132"), 4}.valid());    // bottom contains 132
    CHECK(Domino{Permutation::from_text(""), 1}.valid());
}

TEST_CASE("threshold bounds") {
    Domino ok{Permutation::from_text("1"), 1};
    CHECK(ok.valid());
    CHECK((Domino{Permutation::from_text("1"), 2}.valid()));
    CHECK(!(Domino{Permutation::from_text("1"), 0}.valid()));
    CHECK(!(Domino{Permutation::from_text("1"), 3}.valid()));
}

TEST_CASE("counts against the closed form") {
    long expected[] = {1, 2, 6, 22, 91, 408, 1938};
    for (int n = 0; n <= 6; ++n) {
        CHECK(count_dominoes_brute(n) == BigInt(expected[n]));
        CHECK(domino_count_formula(n) == BigInt(expected[n]));
    }
    CHECK(domino_count_formula(7) == BigInt(9614));
}

TEST_CASE("threaded count agrees with single-threaded") {
    for (int n = 0; n <= 6; ++n)
        CHECK(count_dominoes_brute(n, 4) == count_dominoes_brute(n, 1));
}

TEST_CASE("rotation by a half turn is a validity-preserving involution") {
    for (int n = 0; n <= 5; ++n) {
        long count = 0;
        enumerate_dominoes(n, [&](const Domino& d) {
            Domino r = d.rotate180();
            CHECK(r.valid());
            CHECK(r.rotate180() == d);
            ++count;
            return true;
        });
        CHECK(BigInt(count) == domino_count_formula(n));
    }
}

TEST_CASE("leaf statistics on small cells") {
    // leaves of the top cell are its right-to-left maxima
    Domino d{Permutation::from_text("2134"), 3};  // top 12, bottom 21
    DominoStats s = stats(d);
    CHECK(s.top.leaves == 1);     // RL maxima of "12": just the 2
    CHECK(s.bottom.leaves == 2);  // LR minima of "21": both entries
    CHECK(s.leaves() == s.top.leaves + s.bottom.leaves);
}

TEST_CASE("top-cell totals match the closed forms; rotation doubles them") {
    for (int n = 1; n <= 7; ++n) {
        BigInt top_leaves = 0, top_empties = 0, both_leaves = 0, both_empties = 0;
        enumerate_dominoes(n, [&](const Domino& d) {
            DominoStats s = stats(d);
            top_leaves += s.top.leaves;
            top_empties += s.top.empty_medial;
            both_leaves += s.leaves();
            both_empties += s.empty_strips();
            return true;
        });
        CHECK(top_leaves == leaf_total_formula(n));
        CHECK(top_empties == strip_total_formula(n));
        CHECK(both_leaves == 2 * leaf_total_formula(n));
        CHECK(both_empties == 2 * strip_total_formula(n));
        Rational avg_l(top_leaves, domino_count_formula(n));
        avg_l.canonicalize();
        CHECK(avg_l == expected_leaves(n));
        Rational avg_e(top_empties, domino_count_formula(n));
        avg_e.canonicalize();
        CHECK(avg_e == expected_empty_strips(n));
    }
}

TEST_CASE("split counts refine the totals") {
    MarkedSeries split = split_marked_series(10);
    for (int n = 0; n <= 6; ++n) {
        BigInt total = 0;
        for (int t = 0; t <= n; ++t) {
            BigInt c = count_dominoes_by_split_brute(t, n - t);
            CHECK(c == count_dominoes_by_split(t, n - t, split));
            total += c;
        }
        CHECK(total == domino_count_formula(n));
    }
}

TEST_CASE("balanced and constrained balanced counts") {
    MarkedSeries split = split_marked_series(10);
    for (int m = 0; m <= 5; ++m)
        CHECK(count_balanced(m, split) == count_dominoes_by_split_brute(m, m));
    // with thresholds 0 the constrained count only adds the edge-strip admission
    Rational zero(0);
    for (int m = 1; m <= 4; ++m)
        CHECK(count_constrained_balanced(m, zero, zero) >= BigInt(0));
    CHECK_THROWS(count_constrained_balanced(5, zero, zero));  // 2m exceeds the ceiling
}
