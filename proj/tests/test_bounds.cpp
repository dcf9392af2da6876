#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "staircase/bounds.hpp"

using namespace staircase;
using Quad = boost::multiprecision::cpp_bin_float_quad;

TEST_CASE("splitting an avoider and reassembling it") {
    Permutation p1324 = Permutation::from_text("1324");
    for (int n = 0; n <= 7; ++n) {
        std::set<SplitImage> images;
        long total = 0;
        enumerate_avoiders(n, p1324, [&](const Permutation& s) {
            SplitImage img = split_avoider(s);
            CHECK(img.domino.valid());
            CHECK(static_cast<int>(img.word.size()) == n);
            CHECK(unsplit(img) == s);
            images.insert(img);
            ++total;
            return true;
        });
        CHECK(static_cast<long>(images.size()) == total);
    }
}

TEST_CASE("unsplit rejects inconsistent images") {
    SplitImage img = split_avoider(Permutation::from_text("2134"));
    img.word.push_back(Bead::Disk);  // word longer than the domino
    CHECK_THROWS(unsplit(img));
}

TEST_CASE("upper bound value") {
    CHECK(upper_bound_value() == Rational(27, 2));
    CHECK(to_fraction_string(upper_bound_value()) == "27/2");
}

TEST_CASE("the exact 81/8 identity") {
    SimpleLowerBound s = simple_lower_bound_identity();
    CHECK(s.ok);
    CHECK(s.value == Rational(81, 8));
    CHECK(s.pow3_sum == Rational(4));
    CHECK(s.pow2_sum == Rational(3));
}

TEST_CASE("p_1 assembles from frozen factors") {
    MarkedSeries split = split_marked_series(28);
    CHECK(split.coeff(28).coeff(14) == BigInt("13783027749444297852"));
    CHECK(count_av213_by_components(8, 7) == BigInt(7));
    CHECK(binomial(21, 14) == BigInt(116280));
    CHECK(p_k_count(1, split) == BigInt("11218833266937680679613920"));
    CHECK_THROWS(p_k_count(2, split));  // needs order 56
}

TEST_CASE("gridding count bound") {
    // binom(n+ceil((j-1)/2), .) * binom(n+floor((j-1)/2), .)
    CHECK(gridding_count_bound(2, 2) == BigInt(3));
    CHECK(gridding_count_bound(1, 1) == BigInt(1));
    CHECK(gridding_count_bound(2, 3) == BigInt(9));
    CHECK_THROWS(gridding_count_bound(0, 1));
}

TEST_CASE("kernel generating function evaluations") {
    // H(z, 1) is the Catalan generating function
    double z = 0.09;
    double h = H_eval<double>(z, 1.0);
    double cat = (1 - std::sqrt(1 - 4 * z)) / (2 * z);
    CHECK(h == doctest::Approx(cat).epsilon(1e-12));
    // the coefficient arrays h_i(q) start 1; q; q + q^2
    IntPoly h2 = h_poly(2);
    CHECK(h2.coeff(0) == BigInt(0));
    CHECK(h2.coeff(1) == BigInt(1));
    CHECK(h2.coeff(2) == BigInt(1));
    CHECK(h_poly(1).coeff(1) == BigInt(1));
    // series coefficients of H match the closed-form component counts
    auto H = H_series(10);
    for (int i = 1; i <= 10; ++i)
        for (int k = 1; k <= i; ++k)
            CHECK(H.coeff(i).coeff(k) == count_av213_by_components(i, k));
}

TEST_CASE("H_j agrees with the direct series derivative at sample points") {
    // compare the jet-based H_j against a numerically summed series
    auto H = H_series(60);
    for (int j : {1, 2, 3}) {
        for (double z : {0.03, 0.06, 0.09}) {
            for (double q : {0.8, 1.0, 1.7}) {
                double direct = 0;
                for (int n = 0; n <= 60; ++n) {
                    double qn = 0;
                    IntPoly p = H.coeff(n);
                    for (int k = 0; k <= p.degree(); ++k)
                        qn += p.coeff(k).get_d() * std::pow(q, k);
                    double b = 1;
                    for (int t = 1; t <= j; ++t) b *= static_cast<double>(n + t) / t;
                    direct += b * qn * std::pow(z, n);
                }
                CHECK(H_j_eval<double>(j, z, q) == doctest::Approx(direct).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("log-convexity witnesses") {
    CHECK(check_log_convexity(ConvexityKind::HPolys, 8).ok);
    CHECK(check_log_convexity(ConvexityKind::HjSequence, 6).ok);
}

TEST_CASE("equitable strip profile") {
    Rational alpha(11, 20), beta(7, 40);
    StripProfile s = equitable_strip_profile(40, alpha, beta);
    CHECK(s.e0 == 8);
    CHECK(s.e2 == 11);
    CHECK(s.e3 == 0);
    // balance equations at the default parameters
    BoundParams p;
    StripProfile d = equitable_strip_profile(40, p.alpha, p.beta);
    long am = 23, bm = 8;  // ceil(40a), ceil(40b) just below 5/9 and 5/27
    CHECK(2 * d.e2 + 3 * d.e3 == am);
    CHECK(d.e0 + d.e2 + d.e3 == 40 - am + 1);
    CHECK(d.e0 == bm + 1);
    CHECK_THROWS(equitable_strip_profile(10, p.alpha, p.beta));
    CHECK_THROWS(equitable_strip_profile(40, Rational(9, 10), p.beta));
}

TEST_CASE("certificate at the reference parameters") {
    BoundParams p;
    Certificate c = certify_lower_bound<double>(p);
    CHECK(c.valid);
    CHECK(c.q0 == doctest::Approx(2.917054).epsilon(1e-3));
    CHECK(c.q_pole == doctest::Approx(9.15).epsilon(0.003));
    CHECK(c.G > 1.0);
    CHECK(c.bound == doctest::Approx(10.271012).epsilon(1e-5));
    Certificate cq = certify_lower_bound<Quad>(p);
    CHECK(cq.valid);
    CHECK(std::abs(cq.bound - c.bound) < 1e-9);
}

TEST_CASE("certificates fail loudly outside the legal region") {
    BoundParams p;
    p.z0 = 0.5;  // outside (0, 4/27)
    Certificate c = certify_lower_bound<double>(p);
    CHECK(!c.valid);
    CHECK(!c.reason.empty());
    BoundParams p2;
    p2.alpha = Rational(99, 100);
    CHECK(!certify_lower_bound<double>(p2).valid);
}

TEST_CASE("optimizer improves a perturbed seed") {
    BoundParams seed;
    seed.gamma *= 1.05;
    seed.kappa *= 0.95;
    Certificate c = optimize_lower_bound<double>(seed, 400, 7);
    CHECK(c.valid);
    CHECK(c.bound > 10.2709);
}

TEST_CASE("diagnostic tail product stays below its limit") {
    BoundParams p;
    JmReport r = j_m_report<double>(40, p.z0, p, 40);
    CHECK(r.value > 0);
    CHECK(r.value < r.limit);
    CHECK(r.limit == doctest::Approx(0.894).epsilon(0.01));
}
