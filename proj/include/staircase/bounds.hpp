#pragma once

// Growth-rate bounds.  The upper bound comes from an injection of avoiders
// into (binary word, domino) pairs; the simple lower bound from an exact
// product identity; the sharp lower bound from a numeric certificate built
// out of the component-counting function H(z,q) and its transforms.

#include <cmath>
#include <random>
#include <string>

#include "staircase/domino.hpp"
#include "staircase/grid.hpp"
#include "staircase/jet.hpp"

namespace staircase {

// ---------------------------------------------------------------------------
// The splitting injection: avoider -> (word, domino).
// ---------------------------------------------------------------------------

enum class Bead { Ring, Disk };

struct SplitImage {
    std::vector<Bead> word;  // read value-descending: Ring = upper cell
    Domino domino;

    bool operator==(const SplitImage& o) const { return word == o.word && domino == o.domino; }
    bool operator<(const SplitImage& o) const {
        if (word != o.word) return word < o.word;
        if (domino.perm.values != o.domino.perm.values)
            return domino.perm.values < o.domino.perm.values;
        return domino.threshold < o.domino.threshold;
    }
};

// Grid sigma greedily, record for each value (top to bottom) which kind of
// cell holds it, then collapse all upper cells into one top cell and all
// lower cells into one bottom cell, preserving positions.
inline SplitImage split_avoider(const Permutation& sigma) {
    GriddedPermutation g = greedy_grid(sigma);  // throws on 1324 containment
    int n = sigma.size();
    std::vector<bool> upper_of_value(static_cast<size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        int v = sigma(i);
        int k = 0, l = 0;
        while (g.cols[static_cast<size_t>(k) + 1] <= i) ++k;
        while (g.rows[static_cast<size_t>(l) + 1] <= v) ++l;
        CellLabel lab = g.labels[static_cast<size_t>(k)][static_cast<size_t>(l)];
        assert(lab != CellLabel::Empty);
        upper_of_value[static_cast<size_t>(v)] = (lab == CellLabel::Av213);
    }
    SplitImage img;
    for (int v = n; v >= 1; --v)
        img.word.push_back(upper_of_value[static_cast<size_t>(v)] ? Bead::Ring : Bead::Disk);
    // collapse: lower values get 1..b by original order, upper get b+1..n
    int b = 0;
    for (int v = 1; v <= n; ++v)
        if (!upper_of_value[static_cast<size_t>(v)]) ++b;
    std::vector<int> newval(static_cast<size_t>(n) + 1, 0);
    int next_low = 1, next_high = b + 1;
    for (int v = 1; v <= n; ++v)
        newval[static_cast<size_t>(v)] = upper_of_value[static_cast<size_t>(v)] ? next_high++ : next_low++;
    std::vector<int> vals;
    for (int i = 1; i <= n; ++i) vals.push_back(newval[static_cast<size_t>(sigma(i))]);
    img.domino = Domino{Permutation::unchecked(std::move(vals)), b + 1};
    assert(img.domino.valid());
    return img;
}

// Inverse: reassign values n..1 following the word, drawing the next-highest
// unused entry from the named cell of the domino.
inline Permutation unsplit(const SplitImage& img) {
    int n = img.domino.size();
    if (static_cast<int>(img.word.size()) != n)
        throw std::invalid_argument("inconsistent image: word length != domino size");
    int rings = 0;
    for (Bead bd : img.word)
        if (bd == Bead::Ring) ++rings;
    // positions of each cell, ordered by decreasing domino value
    std::vector<int> top_pos, bot_pos;  // built descending by value
    std::vector<int> pos_of(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos_of[static_cast<size_t>(img.domino.perm(i))] = i;
    for (int v = n; v >= 1; --v)
        (v >= img.domino.threshold ? top_pos : bot_pos).push_back(pos_of[static_cast<size_t>(v)]);
    if (rings != static_cast<int>(top_pos.size()))
        throw std::invalid_argument("inconsistent image: ring count != top cell size");
    std::vector<int> vals(static_cast<size_t>(n), 0);
    size_t ti = 0, bi = 0;
    int v = n;
    for (Bead bd : img.word) {
        int pos = bd == Bead::Ring ? top_pos[ti++] : bot_pos[bi++];
        vals[static_cast<size_t>(pos - 1)] = v--;
    }
    return Permutation::unchecked(std::move(vals));
}

// ---------------------------------------------------------------------------
// The two exact bounds.
// ---------------------------------------------------------------------------

// Each avoider maps injectively to a word (2^n choices) and a domino, so the
// growth rate is at most 2 * 27/4.
inline Rational upper_bound_value() { return Rational(27, 2); }

struct SimpleLowerBound {
    Rational value;      // 81/8
    Rational pow3_sum;   // exponents of 3 across the three factors
    Rational pow2_sum;   // exponents of 2
    bool ok;             // pow3_sum == 4 and pow2_sum == 3
};

// The per-point contribution of the periodic construction splits into powers
// of 3 and of 2; summed exactly they give 3^4 / 2^3 = 81/8.
inline SimpleLowerBound simple_lower_bound_identity() {
    Rational p3 = Rational(7, 3) + Rational(1, 2) + Rational(7, 6);
    Rational p2 = Rational(14, 9) + Rational(2, 3) + Rational(7, 9);
    SimpleLowerBound r{Rational(81, 8), p3, p2, p3 == Rational(4) && p2 == Rational(3)};
    return r;
}

// number of building blocks at scale k: balanced dominoes of size 28k, times
// 213-avoiders of length 8k with 7k components, times interleavings
inline BigInt p_k_count(long k, const MarkedSeries& split) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (28 * k > split.order)
        throw std::invalid_argument("infeasible size: split series order too low for this k");
    BigInt B = split.coeff(static_cast<int>(28 * k)).coeff(static_cast<int>(14 * k));
    BigInt C = count_av213_by_components(8 * k, 7 * k);
    BigInt result = 1;
    for (long i = 0; i < k; ++i) result *= B * C;
    BigInt interleave = binomial(21 * k, 14 * k);
    for (long i = 0; i < 2 * k - 1; ++i) result *= interleave;
    return result;
}

// how many ways an n-point permutation can be gridded into j staircase cells
inline BigInt gridding_count_bound(long n, long j) {
    if (n < 1 || j < 1) throw std::invalid_argument("n and j must be >= 1");
    long up = (j - 1 + 1) / 2, down = (j - 1) / 2;
    return binomial(n + up, up) * binomial(n + down, down);
}

// ---------------------------------------------------------------------------
// H(z,q) and its z-transforms.
// ---------------------------------------------------------------------------

template <class Real>
Real to_real(const Rational& r) {
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}
template <>
inline double to_real<double>(const Rational& r) {
    return r.get_d();
}

// H counts 213-avoiders with q marking skew components; works on any scalar
// type with +,-,*,/ and sqrt, including jets.
template <class S>
S H_eval_raw(const S& z, const S& q) {
    using std::sqrt;
    return S(2) / (S(2) - q + q * sqrt(S(1) - S(4) * z));
}

template <class Real>
Real q_pole(Real z0) {
    using std::sqrt;
    return Real(2) / (Real(1) - sqrt(Real(1) - Real(4) * z0));
}

template <class Real>
Real H_eval(Real z, Real q) {
    using std::sqrt;
    if (!(z < Real(0.25))) throw std::domain_error("outside domain: need z < 1/4");
    if (!(Real(2) - q + q * sqrt(Real(1) - Real(4) * z) > Real(0)))
        throw std::domain_error("outside domain: q at or past the pole");
    return H_eval_raw(z, q);
}

// H_j = coefficientwise multiplication of [z^n] by binom(n+j, j), evaluated
// through the identity H_j = (1/j!) d^j/dz^j (z^j H): carry a z-jet of order
// j through H and reassemble.  j <= 3 is all the certificate needs.
template <class S>
S H_j_eval_raw(int j, const S& z, const S& q) {
    Jet<S, 3> h = H_eval_raw(Jet<S, 3>::variable(z), Jet<S, 3>(q));
    // (1/j!) d^j(z^j H) = sum_k binom(j,k) z^k H^(k)/k!
    static const int binom3[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    S zpow(1), out(0);
    for (int k = 0; k <= j; ++k) {
        out += S(binom3[j][k]) * zpow * h.a[k];
        zpow = zpow * z;
    }
    return out;
}

template <class Real>
Real H_j_eval(int j, Real z, Real q) {
    if (j < 0 || j > 3) throw std::invalid_argument("transform order must be in 0..3");
    using std::sqrt;
    if (!(z < Real(0.25))) throw std::domain_error("outside domain: need z < 1/4");
    if (!(Real(2) - q + q * sqrt(Real(1) - Real(4) * z) > Real(0)))
        throw std::domain_error("outside domain: q at or past the pole");
    return H_j_eval_raw(j, z, q);
}

// exact q-polynomial coefficients of H: h_i(q) counts Av_i(213) by components
inline IntPoly h_poly(int i) {
    IntPoly p;
    if (i == 0) return IntPoly::constant(1);
    p.c.assign(static_cast<size_t>(i) + 1, BigInt(0));
    for (int k = 1; k <= i; ++k) p.c[static_cast<size_t>(k)] = count_av213_by_components(i, k);
    p.trim();
    return p;
}

inline Series<IntPoly> H_series(int order) {
    Series<IntPoly> s(order);
    for (int i = 0; i <= order; ++i) s.a[static_cast<size_t>(i)] = h_poly(i);
    return s;
}

namespace detail {
inline BigInt scale_coeff(const BigInt& c, const BigInt& b) { return c * b; }
inline IntPoly scale_coeff(const IntPoly& c, const BigInt& b) { return c * IntPoly::constant(b); }
}  // namespace detail

// multiply [z^n] by binom(n+j, j)
template <class C>
Series<C> omega(const Series<C>& s, int j) {
    if (j < 0) throw std::invalid_argument("transform order must be >= 0");
    Series<C> r(s.order);
    for (int n = 0; n <= s.order; ++n)
        r.a[static_cast<size_t>(n)] = detail::scale_coeff(s.a[static_cast<size_t>(n)], binomial(n + j, j));
    return r;
}

// ---------------------------------------------------------------------------
// Log-convexity machinery behind the certificate.
// ---------------------------------------------------------------------------

enum class ConvexityKind { HPolys, HjSequence };

struct ConvexityWitness {
    bool ok = true;
    int i = -1, j = -1, z_index = -1, q_index = -1;  // failing coefficient if !ok
};

inline ConvexityWitness check_log_convexity(ConvexityKind kind, int depth) {
    ConvexityWitness w;
    if (kind == ConvexityKind::HPolys) {
        std::vector<IntPoly> h;
        for (int i = 0; i <= depth + 1; ++i) h.push_back(h_poly(i));
        for (int i = 0; i <= depth; ++i)
            for (int j = i; j <= depth; ++j) {
                IntPoly diff = h[static_cast<size_t>(i)] * h[static_cast<size_t>(j + 1)] -
                               h[static_cast<size_t>(i + 1)] * h[static_cast<size_t>(j)];
                for (int c = 0; c <= diff.degree(); ++c)
                    if (diff.coeff(c) < 0) return {false, i, j, -1, c};
            }
    } else {
        Series<IntPoly> base = H_series(depth);
        std::vector<Series<IntPoly>> Hj;
        for (int j = 0; j <= depth + 1; ++j) Hj.push_back(omega(base, j));
        for (int i = 0; i <= depth; ++i)
            for (int j = i; j <= depth; ++j) {
                Series<IntPoly> diff = Hj[static_cast<size_t>(i)] * Hj[static_cast<size_t>(j + 1)] -
                                       Hj[static_cast<size_t>(i + 1)] * Hj[static_cast<size_t>(j)];
                for (int n = 0; n <= diff.order; ++n) {
                    const IntPoly& p = diff.a[static_cast<size_t>(n)];
                    for (int c = 0; c <= p.degree(); ++c)
                        if (p.coeff(c) < 0) return {false, i, j, n, c};
                }
            }
    }
    return w;
}

// ---------------------------------------------------------------------------
// The certificate.
// ---------------------------------------------------------------------------

struct StripProfile {
    long e0 = 0, e2 = 0, e3 = 0;  // empty, two-leaf, three-leaf strips
};

namespace detail {
inline long ceil_mul(const Rational& r, long m) {
    BigInt q;
    BigInt num = r.get_num() * m;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}
}  // namespace detail

// the strip-type counts that spread ceil(alpha m) leaves as evenly as the
// constraints allow over m - ceil(alpha m) + 1 strips
inline StripProfile equitable_strip_profile(long m, const Rational& alpha, const Rational& beta) {
    if (!(alpha >= Rational(11, 20) && alpha < Rational(5, 9)))
        throw std::invalid_argument("out of range: alpha must lie in [11/20, 5/9)");
    if (!(beta >= Rational(7, 40) && beta < Rational(5, 27)))
        throw std::invalid_argument("out of range: beta must lie in [7/40, 5/27)");
    if (m < 32) throw std::invalid_argument("out of range: m must be >= 32");
    long am = detail::ceil_mul(alpha, m), bm = detail::ceil_mul(beta, m);
    StripProfile p{bm + 1, 3 * m - 4 * am - 3 * bm, 3 * am + 2 * bm - 2 * m};
    if (p.e0 < 0 || p.e2 < 0 || p.e3 < 0)
        throw std::logic_error("negative strip profile despite range checks");
    return p;
}

// Solve q * [beta Hq'/H + (3-4a-3b) H2q'/H2 + (3a+2b-2) H3q'/H3] = kappa for
// q in (0, q_pole).  Bracketed bisection after a uniqueness scan, then a few
// secant steps.
template <class Real>
Real solve_q0(Real z0, const Rational& alpha, const Rational& beta, Real kappa) {
    if (!(z0 > Real(0) && z0 < Real(4) / Real(27)))
        throw std::domain_error("outside domain: need 0 < z0 < 4/27");
    Rational w2r = Rational(3) - Rational(4) * alpha - Rational(3) * beta;
    Rational w3r = Rational(3) * alpha + Rational(2) * beta - Rational(2);
    if (w2r < 0 || w3r < 0)
        throw std::domain_error("outside domain: transform exponents must be nonnegative");
    Real w1 = to_real<Real>(beta), w2 = to_real<Real>(w2r), w3 = to_real<Real>(w3r);
    Real qp = q_pole(z0);
    auto f = [&](Real q) {
        using QJ = Jet<Real, 1>;
        QJ qj = QJ::variable(q);
        Real sum(0);
        for (int j = 1; j <= 3; ++j) {
            QJ h = H_j_eval_raw(j == 1 ? 0 : j, QJ(z0), qj);
            Real w = j == 1 ? w1 : (j == 2 ? w2 : w3);
            sum += w * h.a[1] / h.a[0];
        }
        return q * sum - kappa;
    };
    const int scan_points = 1024;
    Real lo = qp * Real(1e-6), hi = qp * (Real(1) - Real(1e-6));
    Real step = (hi - lo) / Real(scan_points);
    int sign_changes = 0;
    Real blo = lo, bhi = hi;
    Real prev = f(lo);
    for (int i = 1; i <= scan_points; ++i) {
        Real x = lo + step * Real(i);
        Real cur = f(x);
        if ((prev < Real(0)) != (cur < Real(0))) {
            ++sign_changes;
            blo = x - step;
            bhi = x;
        }
        prev = cur;
    }
    if (sign_changes == 0) throw std::runtime_error("no root: f(q) does not change sign");
    if (sign_changes > 1) throw std::runtime_error("multiple roots: refusing to certify");
    Real flo = f(blo);
    while (bhi - blo > Real(1e-13)) {
        Real mid = (blo + bhi) / Real(2);
        Real fm = f(mid);
        if ((fm < Real(0)) == (flo < Real(0))) {
            blo = mid;
            flo = fm;
        } else {
            bhi = mid;
        }
    }
    // secant polish
    Real a = blo, b = bhi, fa = f(a), fb = f(b);
    for (int it = 0; it < 8 && fb != fa; ++it) {
        Real c = b - fb * (b - a) / (fb - fa);
        if (!(c > Real(0) && c < qp)) break;
        a = b;
        fa = fb;
        b = c;
        fb = f(b);
    }
    return b;
}

struct BoundParams {
    Rational alpha = Rational(5, 9) - Rational(1, 100000000);
    Rational beta = Rational(5, 27) - Rational(1, 100000000);
    double gamma = 0.951509;
    double kappa = 0.496339;
    double z0 = 0.097361383;
};

struct Certificate {
    BoundParams params;
    double q0 = 0, q_pole = 0, G = 0, bound = 0;
    bool valid = false;
    std::string reason;  // empty when valid
};

template <class Real>
Real G_value_real(const BoundParams& p, Real z0, Real q0) {
    using std::pow;
    Real a = to_real<Real>(p.alpha), b = to_real<Real>(p.beta);
    Real g = Real(p.gamma), k = Real(p.kappa);
    Real w2 = Real(3) - Real(4) * a - Real(3) * b, w3 = Real(3) * a + Real(2) * b - Real(2);
    Real H = H_eval(z0, q0), H2 = H_j_eval(2, z0, q0), H3 = H_j_eval(3, z0, q0);
    return pow(Real(27) * z0 / Real(4), Real(1) + g) * pow(q0, -k) * pow(H, b) * pow(H2, w2) *
           pow(H3, w3) * pow(g + k, g + k) / (pow(g, g) * pow(k, k));
}

template <class Real = double>
double G_value(const BoundParams& p, double q0) {
    return static_cast<double>(G_value_real<Real>(p, Real(p.z0), Real(q0)));
}

template <class Real = double>
Certificate certify_lower_bound(const BoundParams& p) {
    Certificate c;
    c.params = p;
    if (!(p.z0 > 0 && p.z0 < 4.0 / 27)) {
        c.reason = "z0 outside (0, 4/27)";
        return c;
    }
    if (!(p.alpha >= Rational(11, 20) && p.alpha < Rational(5, 9)) ||
        !(p.beta >= Rational(7, 40) && p.beta < Rational(5, 27))) {
        c.reason = "alpha or beta outside the legal box";
        return c;
    }
    if (!(p.gamma > 0 && p.kappa > 0)) {
        c.reason = "gamma and kappa must be positive";
        return c;
    }
    Real z0 = Real(p.z0);
    c.q_pole = static_cast<double>(q_pole(z0));
    Real q0;
    try {
        q0 = solve_q0(z0, p.alpha, p.beta, Real(p.kappa));
    } catch (const std::exception& e) {
        c.reason = e.what();
        return c;
    }
    c.q0 = static_cast<double>(q0);
    Real G = G_value_real<Real>(p, z0, q0);
    c.G = static_cast<double>(G);
    c.bound = 1.0 / p.z0;
    if (!(c.q0 > 0 && c.q0 < c.q_pole)) {
        c.reason = "q0 escaped (0, q_pole)";
        return c;
    }
    if (!(G > Real(1))) {
        c.reason = "G(z0) <= 1";
        return c;
    }
    c.valid = true;
    return c;
}

// Maximize the certified bound 1/z0 over (gamma, kappa), alpha and beta held
// at their defaults: for each candidate, the smallest z0 with G(z0) slightly
// above 1 is found by bisection (G increases with z0), and Nelder-Mead with
// random restarts walks the two free parameters.
template <class Real = double>
Certificate optimize_lower_bound(const BoundParams& seed, int budget, unsigned rng_seed = 1) {
    const double z_hi = 4.0 / 27 - 1e-9;
    int evals = 0;
    bool exhausted = false;
    auto smallest_z0 = [&](double gamma, double kappa) -> double {
        BoundParams p = seed;
        p.gamma = gamma;
        p.kappa = kappa;
        auto G_at = [&](double z) -> double {
            p.z0 = z;
            Certificate c = certify_lower_bound<Real>(p);
            return c.reason.empty() || c.reason == "G(z0) <= 1" ? c.G : -1.0;
        };
        double hi = z_hi, lo = 1e-3;
        if (!(G_at(hi) >= 1 + 1e-12)) return 0;  // infeasible even at the edge
        for (int it = 0; it < 60; ++it) {
            double mid = (lo + hi) / 2;
            if (G_at(mid) >= 1 + 1e-12)
                hi = mid;
            else
                lo = mid;
        }
        return hi;
    };
    auto objective = [&](double gamma, double kappa) -> double {
        if (gamma <= 0 || kappa <= 0) return 0;
        if (evals >= budget) {
            exhausted = true;
            return 0;
        }
        ++evals;
        double z = smallest_z0(gamma, kappa);
        return z > 0 ? 1.0 / z : 0;
    };

    std::mt19937 rng(rng_seed);
    double best_g = seed.gamma, best_k = seed.kappa, best_val = objective(seed.gamma, seed.kappa);
    auto nelder_mead = [&](double g0, double k0) {
        struct Pt {
            double g, k, v;
        };
        std::array<Pt, 3> s{Pt{g0, k0, objective(g0, k0)},
                            Pt{g0 * 1.02, k0, objective(g0 * 1.02, k0)},
                            Pt{g0, k0 * 1.02, objective(g0, k0 * 1.02)}};
        for (int it = 0; it < 200 && evals < budget; ++it) {
            std::sort(s.begin(), s.end(), [](const Pt& x, const Pt& y) { return x.v > y.v; });
            if (std::abs(s[0].g - s[2].g) + std::abs(s[0].k - s[2].k) < 1e-10) break;
            double cg = (s[0].g + s[1].g) / 2, ck = (s[0].k + s[1].k) / 2;
            double rg = cg + (cg - s[2].g), rk = ck + (ck - s[2].k);
            double rv = objective(rg, rk);
            if (rv > s[0].v) {
                double eg = cg + 2 * (cg - s[2].g), ek = ck + 2 * (ck - s[2].k);
                double ev = objective(eg, ek);
                s[2] = ev > rv ? Pt{eg, ek, ev} : Pt{rg, rk, rv};
            } else if (rv > s[1].v) {
                s[2] = {rg, rk, rv};
            } else {
                double kg = cg + 0.5 * (s[2].g - cg), kk = ck + 0.5 * (s[2].k - ck);
                double kv = objective(kg, kk);
                if (kv > s[2].v) {
                    s[2] = {kg, kk, kv};
                } else {
                    for (int i = 1; i < 3; ++i) {
                        s[static_cast<size_t>(i)].g = (s[static_cast<size_t>(i)].g + s[0].g) / 2;
                        s[static_cast<size_t>(i)].k = (s[static_cast<size_t>(i)].k + s[0].k) / 2;
                        s[static_cast<size_t>(i)].v =
                            objective(s[static_cast<size_t>(i)].g, s[static_cast<size_t>(i)].k);
                    }
                }
            }
        }
        std::sort(s.begin(), s.end(), [](const Pt& x, const Pt& y) { return x.v > y.v; });
        if (s[0].v > best_val) {
            best_val = s[0].v;
            best_g = s[0].g;
            best_k = s[0].k;
        }
    };
    nelder_mead(seed.gamma, seed.kappa);
    std::uniform_real_distribution<double> jitter(0.97, 1.03);
    while (evals < budget) nelder_mead(best_g * jitter(rng), best_k * jitter(rng));

    BoundParams p = seed;
    p.gamma = best_g;
    p.kappa = best_k;
    double z = smallest_z0(best_g, best_k);
    if (z > 0) p.z0 = z;
    Certificate c = certify_lower_bound<Real>(p);
    if (exhausted && c.valid) c.reason = "budget exhausted; best so far";
    return c;
}

// ---------------------------------------------------------------------------
// Finite-m diagnostic for the connecting-cell series.
// ---------------------------------------------------------------------------

struct JmReport {
    double value;  // J_m(z0)^(1/m)
    double limit;  // the m -> infinity value at the same parameters
};

namespace detail {

// series power with the q-degree clamped (only coefficients up to q^qmax are
// ever extracted)
inline Series<IntPoly> pow_clamped(Series<IntPoly> base, long e, int qmax) {
    auto clamp = [&](Series<IntPoly>& s) {
        for (auto& p : s.a) p = p.truncated(qmax);
    };
    Series<IntPoly> r = Series<IntPoly>::one(base.order);
    while (e > 0) {
        if (e & 1) {
            r = r * base;
            clamp(r);
        }
        e >>= 1;
        if (e) {
            base = base * base;
            clamp(base);
        }
    }
    return r;
}

}  // namespace detail

template <class Real = double>
JmReport j_m_report(long m, double z0, const BoundParams& params, long c_m, int z_order = 40) {
    if (m > 128 || c_m > 96 || z_order > 120)
        throw std::invalid_argument("infeasible size for the diagnostic computation");
    StripProfile prof = equitable_strip_profile(m, params.alpha, params.beta);
    Series<IntPoly> H = H_series(z_order);
    Series<IntPoly> P = detail::pow_clamped(H, prof.e0, static_cast<int>(c_m));
    P = P * detail::pow_clamped(omega(H, 2), prof.e2, static_cast<int>(c_m));
    for (auto& p : P.a) p = p.truncated(static_cast<int>(c_m));
    P = P * detail::pow_clamped(omega(H, 3), prof.e3, static_cast<int>(c_m));
    Real J(0), zp(1), z(z0);
    for (int n = 0; n <= z_order; ++n) {
        const BigInt& coeff = P.a[static_cast<size_t>(n)].coeff(static_cast<int>(c_m));
        J += to_real<Real>(Rational(coeff)) * zp;
        zp = zp * z;
    }
    using std::pow;
    JmReport rep{};
    rep.value = static_cast<double>(pow(J, Real(1) / Real(m)));
    Real q0 = solve_q0(Real(z0), params.alpha, params.beta, Real(params.kappa));
    Real a = to_real<Real>(params.alpha), b = to_real<Real>(params.beta);
    Real w2 = Real(3) - Real(4) * a - Real(3) * b, w3 = Real(3) * a + Real(2) * b - Real(2);
    rep.limit = static_cast<double>(pow(q0, -Real(params.kappa)) * pow(H_eval(Real(z0), q0), b) *
                                    pow(H_j_eval(2, Real(z0), q0), w2) *
                                    pow(H_j_eval(3, Real(z0), q0), w3));
    return rep;
}

}  // namespace staircase
