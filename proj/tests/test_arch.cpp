#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "staircase/arch.hpp"

using namespace staircase;

TEST_CASE("arch systems are Catalan-counted") {
    for (int n = 0; n <= 9; ++n) {
        long count = 0;
        enumerate_arch_systems(n, [&](const ArchSystem& a) {
            CHECK(a.valid());
            ++count;
            return true;
        });
        CHECK(BigInt(count) == catalan(n));
    }
}

TEST_CASE("lambda on explicit examples") {
    // arcs join positions of consecutive values
    ArchSystem a = lambda_map(Permutation::from_text("213"));
    CHECK(a.arcs == std::vector<std::pair<int, int>>{{1, 3}});
    ArchSystem b = lambda_map(Permutation::from_text("123"));
    CHECK(b.arcs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    ArchSystem c = lambda_map(Permutation::from_text("321"));
    CHECK(c.arcs.empty());
    // a permutation containing both 213 and 132 has no valid image
    CHECK_THROWS(lambda_map(Permutation::from_text("2143")));
}

TEST_CASE("pi maps invert lambda on each class") {
    Permutation p213 = Permutation::from_text("213");
    Permutation p132 = Permutation::from_text("132");
    for (int n = 0; n <= 6; ++n) {
        enumerate_arch_systems(n, [&](const ArchSystem& a) {
            Permutation up = pi_213(a);
            Permutation down = pi_132(a);
            CHECK(!contains(up, p213));
            CHECK(!contains(down, p132));
            CHECK(lambda_map(up) == a);
            CHECK(lambda_map(down) == a);
            return true;
        });
        // both directions: lambda then pi is the identity on each avoider class
        enumerate_avoiders(n, p213, [&](const Permutation& s) {
            CHECK(pi_213(lambda_map(s)) == s);
            return true;
        });
        enumerate_avoiders(n, p132, [&](const Permutation& s) {
            CHECK(pi_132(lambda_map(s)) == s);
            return true;
        });
    }
}

TEST_CASE("configurations: validity and the forbidden pattern") {
    for (int n = 0; n <= 6; ++n) {
        long total = 0, clean = 0;
        enumerate_arch_configs(n, [&](const ArchConfiguration& c) {
            CHECK(c.valid());
            ++total;
            if (!has_forbidden_pattern(c)) ++clean;
            return true;
        });
        CHECK(BigInt(clean) == domino_count_formula(n));
        CHECK(clean <= total);
    }
}

TEST_CASE("domino <-> configuration bijection") {
    for (int n = 0; n <= 6; ++n) {
        enumerate_dominoes(n, [&](const Domino& d) {
            ArchConfiguration c = arch_config_of_domino(d);
            CHECK(c.valid());
            CHECK(!has_forbidden_pattern(c));
            CHECK(domino_of_arch_config(c) == d);
            return true;
        });
        enumerate_arch_configs(n, [&](const ArchConfiguration& c) {
            if (has_forbidden_pattern(c)) {
                CHECK_THROWS(domino_of_arch_config(c));
                return true;
            }
            CHECK(arch_config_of_domino(domino_of_arch_config(c)) == c);
            return true;
        });
    }
}

TEST_CASE("concatenation and splitting recover the parts") {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
            enumerate_arch_configs(n1, [&](const ArchConfiguration& a) {
                enumerate_arch_configs(n2, [&](const ArchConfiguration& b) {
                    ArchConfiguration glued = concat(a, b);
                    CHECK(glued.valid());
                    auto [left, right] = split_config(glued, n1);
                    CHECK(left == a);
                    CHECK(right == b);
                    return true;
                });
                return true;
            });
}

TEST_CASE("splitting across a spanning arc fails") {
    ArchSystem sys;
    sys.n = 2;
    sys.arcs = {{1, 2}};
    ArchConfiguration c{2, {Side::Upper, Side::Upper}, sys, ArchSystem{2, {}}};
    CHECK_THROWS(split_config(c, 1));
    auto [l, r] = split_config(c, 2);
    CHECK(l == c);
    CHECK(r.n == 0);
}

TEST_CASE("domino concatenation matches counting expectations") {
    // concatenating a size-1 domino onto anything yields a valid larger domino
    enumerate_dominoes(1, [&](const Domino& d1) {
        enumerate_dominoes(3, [&](const Domino& d2) {
            Domino glued = domino_concat(d1, d2);
            CHECK(glued.valid());
            CHECK(glued.size() == 4);
            return true;
        });
        return true;
    });
}
