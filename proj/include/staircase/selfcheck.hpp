#pragma once

// The eleven end-to-end checks that gate a build, shared by the acceptance
// binary and the CLI self-test.  "quick" trims enumeration sizes and series
// orders to stay interactive; "full" runs the complete ceilings.

#include <set>
#include <sstream>

#include "staircase/arch.hpp"
#include "staircase/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace staircase {

enum class CheckLevel { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {
inline std::string show(const BigInt& a, const BigInt& b) {
    std::ostringstream os;
    os << a << (a == b ? " == " : " != ") << b;
    return os.str();
}
}  // namespace detail

inline std::vector<CriterionResult> run_criteria(CheckLevel level, int threads = 1) {
    const bool quick = level == CheckLevel::Quick;
    std::vector<CriterionResult> out;
    auto add = [&](int id, std::string name, bool pass, std::string detail) {
        out.push_back({id, std::move(name), pass, std::move(detail)});
    };

    {  // 1: domino counts, enumeration vs closed form
        int nmax = quick ? 7 : 9;
        bool ok = true;
        std::string det;
        for (int n = 0; n <= nmax && ok; ++n) {
            BigInt b = count_dominoes_brute(n, threads), f = domino_count_formula(n);
            if (b != f) {
                ok = false;
                det = "n=" + std::to_string(n) + ": " + detail::show(b, f);
            }
        }
        if (ok) det = "n <= " + std::to_string(nmax) + " exact";
        add(1, "domino enumeration matches closed form", ok, det);
    }

    {  // 2: independent arch-configuration oracle
        int nmax = quick ? 6 : 7;
        bool ok = true;
        std::string det;
        for (int n = 0; n <= nmax && ok; ++n) {
            BigInt c = count_pattern_free_configs(n), f = domino_count_formula(n);
            if (c != f) {
                ok = false;
                det = "n=" + std::to_string(n) + ": " + detail::show(c, f);
            }
        }
        if (ok) det = "pattern-free configurations, n <= " + std::to_string(nmax);
        add(2, "arch-configuration oracle agrees with domino counts", ok, det);
    }

    {  // 3: bijection round trips
        bool ok = true;
        std::string det = "arch systems and dominoes, n <= 6";
        for (int n = 0; n <= 6 && ok; ++n) {
            enumerate_arch_systems(n, [&](const ArchSystem& a) {
                if (!(lambda_map(pi_213(a)) == a) || !(lambda_map(pi_132(a)) == a)) {
                    ok = false;
                    det = "lambda/pi round trip failed at n=" + std::to_string(n);
                }
                return ok;
            });
            if (!ok) break;
            enumerate_dominoes(n, [&](const Domino& d) {
                if (!(domino_of_arch_config(arch_config_of_domino(d)) == d)) {
                    ok = false;
                    det = "domino/config round trip failed at n=" + std::to_string(n);
                }
                return ok;
            });
            if (!ok) break;
            enumerate_arch_configs(n, [&](const ArchConfiguration& c) {
                if (has_forbidden_pattern(c)) return true;
                if (!(arch_config_of_domino(domino_of_arch_config(c)) == c)) {
                    ok = false;
                    det = "config/domino round trip failed at n=" + std::to_string(n);
                }
                return ok;
            });
        }
        add(3, "bijection round trips are exact", ok, det);
    }

    {  // 4: series engine vs closed forms and minimal polynomials
        int n0 = quick ? 12 : 20, n1 = quick ? 12 : 16, n2 = quick ? 12 : 14;
        bool ok = true;
        std::string det;
        IntSeries plain = domino_count_series(n0);
        for (int n = 0; n <= n0 && ok; ++n)
            if (plain.coeff(n) != domino_count_formula(n)) {
                ok = false;
                det = "plain series coefficient " + std::to_string(n);
            }
        if (ok && !check_minimal_polynomial(plain, domino_minimal_cubic())) {
            ok = false;
            det = "domino cubic not satisfied";
        }
        if (ok && check_minimal_polynomial(plain, domino_quadratic_candidate())) {
            ok = false;
            det = "rejected quadratic unexpectedly satisfied";
        }
        MarkedSeries leaves = leaf_marked_series(std::max(n1, n2));
        MarkedSeries strips = strip_marked_series(std::max(n1, n2));
        IntSeries l1 = mark_derivative_at_one(leaves, 1).truncated(n1);
        IntSeries s1 = mark_derivative_at_one(strips, 1).truncated(n1);
        for (int n = 0; n <= n1 && ok; ++n) {
            if (l1.coeff(n) != leaf_total_formula(n)) {
                ok = false;
                det = "leaf total coefficient " + std::to_string(n);
            } else if (s1.coeff(n) != strip_total_formula(n)) {
                ok = false;
                det = "strip total coefficient " + std::to_string(n);
            }
        }
        if (ok && !check_minimal_polynomial(l1, leaf_total_cubic())) {
            ok = false;
            det = "leaf cubic not satisfied";
        }
        if (ok && !check_minimal_polynomial(s1, strip_total_cubic())) {
            ok = false;
            det = "strip cubic not satisfied";
        }
        if (ok && !check_minimal_polynomial(mark_derivative_at_one(leaves, 2).truncated(n2),
                                            leaf_second_moment_cubic())) {
            ok = false;
            det = "leaf second-moment cubic not satisfied";
        }
        if (ok && !check_minimal_polynomial(mark_derivative_at_one(strips, 2).truncated(n2),
                                            strip_second_moment_cubic())) {
            ok = false;
            det = "strip second-moment cubic not satisfied";
        }
        if (ok)
            det = "orders " + std::to_string(n0) + "/" + std::to_string(n1) + "/" + std::to_string(n2);
        add(4, "series engine matches closed forms and minimal polynomials", ok, det);
    }

    {  // 5: statistics totals by enumeration
        int nmax = quick ? 6 : 8;
        bool ok = true;
        std::string det;
        for (int n = 0; n <= nmax && ok; ++n) {
            BigInt leaves = 0, empties = 0;
            // the closed forms count the top cell; rotation gives the bottom
            enumerate_dominoes(n, [&](const Domino& d) {
                DominoStats s = stats(d);
                leaves += s.top.leaves;
                empties += s.top.empty_medial;
                return true;
            });
            if (leaves != leaf_total_formula(n)) {
                ok = false;
                det = "leaf total n=" + std::to_string(n) + ": " +
                      detail::show(leaves, leaf_total_formula(n));
            } else if (empties != strip_total_formula(n)) {
                ok = false;
                det = "empty-strip total n=" + std::to_string(n) + ": " +
                      detail::show(empties, strip_total_formula(n));
            }
        }
        if (ok) det = "leaf and medial-empty-strip totals, n <= " + std::to_string(nmax);
        add(5, "statistics oracles match expectation formulas", ok, det);
    }

    {  // 6: splitting injection
        int nmax = quick ? 6 : 8;
        bool ok = upper_bound_value() == Rational(27, 2);
        std::string det = ok ? "" : "upper_bound_value != 27/2";
        Permutation p1324 = Permutation::from_text("1324");
        for (int n = 0; n <= nmax && ok; ++n) {
            std::set<SplitImage> images;
            long total = 0;
            enumerate_avoiders(n, p1324, [&](const Permutation& s) {
                SplitImage img = split_avoider(s);
                if (!(unsplit(img) == s)) {
                    ok = false;
                    det = "unsplit failed on " + s.to_text();
                }
                images.insert(img);
                ++total;
                return ok;
            });
            if (ok && static_cast<long>(images.size()) != total) {
                ok = false;
                det = "collision at n=" + std::to_string(n);
            }
        }
        if (ok) det = "injective with two-sided inverse, n <= " + std::to_string(nmax) + "; value 27/2";
        add(6, "upper-bound injection is exact", ok, det);
    }

    {  // 7: simple lower bound arithmetic
        SimpleLowerBound s = simple_lower_bound_identity();
        bool ok = s.ok && s.value == Rational(81, 8);
        std::string det = ok ? "exponent sums 4 and 3; value 81/8" : "exponent identity failed";
        if (ok && count_av213_by_components(8, 7) != 7) {
            ok = false;
            det = "component count C(8,7) != 7";
        }
        if (ok && binomial(21, 14) != 116280) {
            ok = false;
            det = "binom(21,14) != 116280";
        }
        if (ok && !quick) {
            MarkedSeries split = split_marked_series(28);
            // the split series must refine the plain counts...
            bool refines = true;
            for (int n = 0; n <= 28 && refines; ++n) {
                BigInt row = 0;
                for (int t = 0; t <= n; ++t) row += split.coeff(n).coeff(t);
                refines = row == domino_count_formula(n);
            }
            if (!refines) {
                ok = false;
                det = "split series does not sum to domino counts";
            } else {
                BigInt p1 = p_k_count(1, split);
                BigInt expect = split.coeff(28).coeff(14) * 7 * binomial(21, 14);
                if (p1 != expect || p1 <= 0) {
                    ok = false;
                    det = "p_1 assembly mismatch";
                } else {
                    det += "; p_1 = " + p1.get_str();
                }
            }
        }
        add(7, "simple lower-bound identity and p_1 assembly", ok, det);
    }

    {  // 8: log-convexity
        ConvexityWitness h = check_log_convexity(ConvexityKind::HPolys, 8);
        ConvexityWitness hj = check_log_convexity(ConvexityKind::HjSequence, 6);
        bool ok = h.ok && hj.ok;
        std::string det = ok ? "h-polynomials depth 8, transform sequence depth 6" : "witness at (" +
                          std::to_string(h.ok ? hj.i : h.i) + "," + std::to_string(h.ok ? hj.j : h.j) + ")";
        for (int i = 1; i <= 10 && ok; ++i)
            for (int k = 1; k <= i; ++k) {
                BigInt closed = BigInt(k) * binomial(2 * i - k, i) / BigInt(2 * i - k);
                if (h_poly(i).coeff(k) != closed) {
                    ok = false;
                    det = "h coefficient (" + std::to_string(i) + "," + std::to_string(k) + ")";
                }
            }
        add(8, "log-convexity and h-coefficient closed form", ok, det);
    }

    Certificate cert_double, cert_quad;
    {  // 9: certificate at the reference parameters, two precisions
        using Quad = boost::multiprecision::cpp_bin_float_quad;
        BoundParams p;
        cert_double = certify_lower_bound<double>(p);
        cert_quad = certify_lower_bound<Quad>(p);
        auto near = [](double x, double y, double tol) { return std::abs(x - y) <= tol; };
        bool ok = true;
        std::string det;
        for (const Certificate* c : {&cert_double, &cert_quad}) {
            if (!c->valid) {
                ok = false;
                det = "certificate invalid: " + c->reason;
            } else if (!near(c->q0, 2.917054, 1e-3)) {
                ok = false;
                det = "q0 = " + std::to_string(c->q0);
            } else if (!near(c->q_pole, 9.15, 0.02)) {
                ok = false;
                det = "q_pole = " + std::to_string(c->q_pole);
            } else if (!(c->G > 1)) {
                ok = false;
                det = "G <= 1";
            } else if (!near(c->bound, 10.271012, 1e-4)) {
                ok = false;
                det = "bound = " + std::to_string(c->bound);
            }
        }
        if (ok && (!near(cert_double.q0, cert_quad.q0, 1e-3) ||
                   !near(cert_double.bound, cert_quad.bound, 1e-4))) {
            ok = false;
            det = "binary64 and high-precision runs disagree";
        }
        if (ok) {
            std::ostringstream os;
            os.precision(10);
            os << "q0 " << cert_double.q0 << ", q_pole " << cert_double.q_pole << ", bound "
               << cert_double.bound << ", both precisions";
            det = os.str();
        }
        add(9, "lower-bound certificate at reference parameters", ok, det);
    }

    Certificate opt;
    {  // 10: optimizer recovery from a perturbed seed
        BoundParams seed;
        int budget = 2000;
        if (quick) {
            budget = 200;  // unperturbed seed: a fast convergence sanity pass
        } else {
            seed.gamma *= 1.1;
            seed.kappa *= 1.1;
        }
        opt = optimize_lower_bound<double>(seed, budget, 1);
        bool ok = opt.valid && opt.bound >= 10.27092;
        std::string det = ok ? "" : "bound = " + std::to_string(opt.bound) + " " + opt.reason;
        if (ok && !quick &&
            (std::abs(opt.params.gamma - 0.951509) > 1e-3 ||
             std::abs(opt.params.kappa - 0.496339) > 1e-3)) {
            ok = false;
            det = "optimizer parameters drifted";
        }
        if (ok) {
            std::ostringstream os;
            os.precision(10);
            os << "bound " << opt.bound << " at gamma " << opt.params.gamma << ", kappa "
               << opt.params.kappa << (quick ? " (reduced budget)" : "");
            det = os.str();
        }
        add(10, "optimizer recovers the certified bound", ok, det);
    }

    {  // 11: sandwich sanity
        bool ok = cert_double.bound < 13.5 && opt.bound < 13.5;
        std::string det = ok ? "" : "a certified bound reached 13.5";
        int nmax = quick ? 6 : 8;
        Permutation p1324 = Permutation::from_text("1324");
        for (int n = 0; n <= nmax && ok; ++n) {
            BigInt av = count_avoiders(n, p1324);
            BigInt rhs = domino_count_formula(n);
            for (int i = 0; i < n; ++i) rhs *= 2;
            if (av > rhs) {
                ok = false;
                det = "avoider count exceeds 2^n * domino count at n=" + std::to_string(n);
            }
        }
        if (ok)
            det = "bounds below 13.5; avoider counts within 2^n * domino counts, n <= " +
                  std::to_string(nmax);
        add(11, "growth-rate sandwich sanity", ok, det);
    }

    return out;
}

}  // namespace staircase
