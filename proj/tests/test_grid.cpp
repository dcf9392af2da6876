#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staircase/grid.hpp"

using namespace staircase;

TEST_CASE("worked example: 2134") {
    GriddedPermutation g = greedy_grid(Permutation::from_text("2134"));
    CHECK(validate_gridding(g));
    // one row divider above the value 1: bottom cell {1}, top cell pattern 123
    REQUIRE(g.rows.size() == 3);
    CHECK(g.rows[1] == 2);
    REQUIRE(g.cols.size() == 2);
    CHECK(g.cell_pattern(0, 1) == Permutation::from_text("123"));
    CHECK(g.cell_pattern(0, 0) == Permutation::from_text("1"));
    CHECK(g.labels[0][1] == CellLabel::Av213);
    CHECK(g.labels[0][0] == CellLabel::Av132);
}

TEST_CASE("trivial inputs") {
    GriddedPermutation g0 = greedy_grid(Permutation::from_text(""));
    CHECK(validate_gridding(g0));
    CHECK(cells_used(g0) == 0);
    GriddedPermutation g1 = greedy_grid(Permutation::from_text("1"));
    CHECK(validate_gridding(g1));
    CHECK(cells_used(g1) == 1);
}

TEST_CASE("greedy gridding rejects hosts containing 1324") {
    CHECK_THROWS(greedy_grid(Permutation::from_text("1324")));
    CHECK_THROWS(greedy_grid(Permutation::from_text("51324")));
    CHECK_THROWS(greedy_grid(Permutation::from_text("142536")));
}

TEST_CASE("every avoider up to length 8 grids validly") {
    Permutation p1324 = Permutation::from_text("1324");
    for (int n = 0; n <= 8; ++n) {
        enumerate_avoiders(n, p1324, [&](const Permutation& s) {
            GriddedPermutation g = greedy_grid(s);
            CHECK(validate_gridding(g));
            CHECK(g.perm == s);
            return true;
        });
    }
}

TEST_CASE("diagonal cells avoid 213 and subdiagonal cells avoid 132") {
    Permutation p1324 = Permutation::from_text("1324");
    Permutation p213 = Permutation::from_text("213");
    Permutation p132 = Permutation::from_text("132");
    for (int n = 0; n <= 7; ++n) {
        enumerate_avoiders(n, p1324, [&](const Permutation& s) {
            GriddedPermutation g = greedy_grid(s);
            for (int k = 0; k < g.column_bands(); ++k)
                for (int l = 0; l < g.row_bands(); ++l) {
                    Permutation cell = g.cell_pattern(k, l);
                    switch (g.labels[static_cast<size_t>(k)][static_cast<size_t>(l)]) {
                        case CellLabel::Av213: CHECK(!contains(cell, p213)); break;
                        case CellLabel::Av132: CHECK(!contains(cell, p132)); break;
                        case CellLabel::Empty: CHECK(cell.size() == 0); break;
                    }
                }
            return true;
        });
    }
}

TEST_CASE("malformed dividers are rejected") {
    GriddedPermutation g = greedy_grid(Permutation::from_text("2134"));
    GriddedPermutation bad = g;
    bad.rows[1] = 99;
    CHECK_THROWS_AS(validate_gridding(bad), std::invalid_argument);
    bad = g;
    bad.cols = {1};
    CHECK_THROWS_AS(validate_gridding(bad), std::invalid_argument);
    bad = g;
    bad.rows = {1, 3, 2, 5};  // not monotone
    CHECK_THROWS_AS(validate_gridding(bad), std::invalid_argument);
}

TEST_CASE("a wrong labelling is invalid, not an exception") {
    GriddedPermutation g = greedy_grid(Permutation::from_text("2134"));
    g.labels[0][1] = CellLabel::Empty;  // top cell holds 123, so Empty is wrong
    CHECK(!validate_gridding(g));
}
