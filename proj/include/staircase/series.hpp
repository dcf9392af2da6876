#pragma once

// Truncated power series in z and the fixed-point solver for the arch-prefix
// functional equations, plus the algebraic-closure polynomials their slices
// satisfy.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "staircase/poly.hpp"

namespace staircase {

// Coefficients live in an exact ring C (integers, or polynomials in marks).
template <class C>
struct Series {
    int order = 0;
    std::vector<C> a;  // size order + 1

    explicit Series(int n) : order(n), a(static_cast<size_t>(n) + 1, RingOps<C>::zero()) {
        if (n < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static Series one(int n) {
        Series s(n);
        s.a[0] = RingOps<C>::one();
        return s;
    }

    C coeff(int i) const {
        if (i < 0 || i > order) return RingOps<C>::zero();
        return a[static_cast<size_t>(i)];
    }

    bool operator==(const Series& o) const { return order == o.order && a == o.a; }

    Series truncated(int n) const {
        Series r(n);
        for (int i = 0; i <= n && i <= order; ++i) r.a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
        return r;
    }

    Series operator+(const Series& o) const {
        assert(order == o.order);
        Series r(order);
        for (int i = 0; i <= order; ++i)
            r.a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + o.a[static_cast<size_t>(i)];
        return r;
    }

    Series operator-(const Series& o) const {
        assert(order == o.order);
        Series r(order);
        for (int i = 0; i <= order; ++i)
            r.a[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - o.a[static_cast<size_t>(i)];
        return r;
    }

    Series operator*(const Series& o) const {
        assert(order == o.order);
        Series r(order);
        for (int i = 0; i <= order; ++i) {
            if (RingOps<C>::is_zero(a[static_cast<size_t>(i)])) continue;
            for (int j = 0; i + j <= order; ++j)
                r.a[static_cast<size_t>(i + j)] =
                    r.a[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * o.a[static_cast<size_t>(j)];
        }
        return r;
    }

    // multiply by z^k
    Series shifted_z(int k = 1) const {
        Series r(order);
        for (int i = 0; i + k <= order; ++i) r.a[static_cast<size_t>(i + k)] = a[static_cast<size_t>(i)];
        return r;
    }

    // Reciprocal via the convolution recurrence.  Only ever needed for series
    // with constant term 1, which keeps everything inside the integer ring.
    Series reciprocal() const {
        if (!(a[0] == RingOps<C>::one()))
            throw std::invalid_argument("series reciprocal requires constant term 1");
        Series r(order);
        r.a[0] = RingOps<C>::one();
        for (int n = 1; n <= order; ++n) {
            C s = RingOps<C>::zero();
            for (int k = 1; k <= n; ++k)
                s = s + a[static_cast<size_t>(k)] * r.a[static_cast<size_t>(n - k)];
            r.a[static_cast<size_t>(n)] = RingOps<C>::zero() - s;
        }
        return r;
    }
};

using IntSeries = Series<BigInt>;
using MarkedSeries = Series<IntPoly>;  // coefficients are polynomials in one mark

// ---------------------------------------------------------------------------
// Functional equation solver.
//
// All four equations share the staircase step: the right-hand side contains
// z(1+v)(A + (A - A(v=0))/v), and every other term is z-guarded, so iterating
// A <- RHS(A) from A = 1 pins the coefficient of z^n after at most n+1 rounds.
// ---------------------------------------------------------------------------

enum class FuncEq { Plain, Leaves, Strips, Split };

namespace detail {

// (1+v)(A + (A - A(0))/v), as a per-z-coefficient operation on v-polynomials.
template <class M>
Series<Poly<M>> insert_step(const Series<Poly<M>>& A) {
    Series<Poly<M>> S(A.order);
    for (int i = 0; i <= A.order; ++i) {
        const Poly<M>& p = A.a[static_cast<size_t>(i)];
        Poly<M> s = p + p.shifted_down_dropping_const();
        S.a[static_cast<size_t>(i)] = s + s.shifted_up();
    }
    return S.shifted_z();
}

inline void mul_mark(Poly<IntPoly>& p) {
    for (IntPoly& q : p.c) q = q.shifted_up();
}
inline void mul_mark(Poly<BigInt>&) {
    throw std::logic_error("mark used in an unmarked equation");
}

template <class M>
Series<Poly<M>> with_mark(Series<Poly<M>> s) {
    for (auto& p : s.a) mul_mark(p);
    return s;
}

template <class M>
Series<Poly<M>> funceq_rhs(FuncEq eq, const Series<Poly<M>>& A) {
    const int N = A.order;
    Series<Poly<M>> one = Series<Poly<M>>::one(N);
    Series<Poly<M>> step = insert_step(A);
    switch (eq) {
        case FuncEq::Plain:
            return (one - A.shifted_z()).reciprocal() + step;
        case FuncEq::Leaves: {
            Series<Poly<M>> zA = A.shifted_z();
            return one + with_mark(zA * (one - zA).reciprocal()) + step;
        }
        case FuncEq::Strips: {
            Series<Poly<M>> zA = A.shifted_z();
            return one + zA + (zA * zA) * (one - with_mark(zA)).reciprocal() + step;
        }
        case FuncEq::Split: {
            Series<Poly<M>> U = with_mark(A.shifted_z());
            return one + U + (U * U) * (one - U).reciprocal() + step;
        }
    }
    throw std::logic_error("unreachable");
}

// The v-degree of [z^n] never exceeds n, and the same holds for each mark.
// Clamping each round keeps transient junk from inflating the polynomials.
inline void clamp_degrees(IntPoly& p, int n) { p = p.truncated(n); }
inline void clamp_degrees(Poly<IntPoly>& p, int n) {
    p = p.truncated(n);
    for (IntPoly& q : p.c) q = q.truncated(n);
    p.trim();
}

}  // namespace detail

// Solve one of the functional equations to z-order N.  M is the mark ring:
// BigInt for the plain equation, IntPoly when one statistic is tracked.
template <class M>
Series<Poly<M>> solve_funceq(FuncEq eq, int N) {
    Series<Poly<M>> A = Series<Poly<M>>::one(N);
    for (int round = 1; round <= N + 1; ++round) {
        int w = std::min(round, N);
        Series<Poly<M>> next = detail::funceq_rhs(eq, A.truncated(w)).truncated(N);
        for (int i = 0; i <= N; ++i) detail::clamp_degrees(next.a[static_cast<size_t>(i)], i);
        A = next;
    }
    Series<Poly<M>> again = detail::funceq_rhs(eq, A);
    for (int i = 0; i <= N; ++i) detail::clamp_degrees(again.a[static_cast<size_t>(i)], i);
    if (!(again == A)) throw std::logic_error("fixed-point iteration failed to stabilize");
    return A;
}

// Set v = 0 (keep only prefixes with no point strictly below the staircase
// boundary line, i.e. whole permutations).
template <class M>
Series<M> v_zero_slice(const Series<Poly<M>>& A) {
    Series<M> s(A.order);
    for (int i = 0; i <= A.order; ++i) s.a[static_cast<size_t>(i)] = A.a[static_cast<size_t>(i)].const_term();
    return s;
}

// The counting series of the four equations, with v eliminated.
inline IntSeries domino_count_series(int N) {
    return v_zero_slice(solve_funceq<BigInt>(FuncEq::Plain, N));
}
inline MarkedSeries leaf_marked_series(int N) {
    return v_zero_slice(solve_funceq<IntPoly>(FuncEq::Leaves, N));
}
inline MarkedSeries strip_marked_series(int N) {
    return v_zero_slice(solve_funceq<IntPoly>(FuncEq::Strips, N));
}
inline MarkedSeries split_marked_series(int N) {
    return v_zero_slice(solve_funceq<IntPoly>(FuncEq::Split, N));
}

// d-th derivative in the mark evaluated at mark = 1, coefficientwise.
inline IntSeries mark_derivative_at_one(const MarkedSeries& s, int d) {
    IntSeries r(s.order);
    for (int i = 0; i <= s.order; ++i) {
        IntPoly p = s.a[static_cast<size_t>(i)];
        for (int k = 0; k < d; ++k) p = p.derivative();
        r.a[static_cast<size_t>(i)] = p.eval_at_one();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Algebraic closure data: integer polynomials P(y, z) that the slices above
// satisfy (or provably fail to satisfy) identically.
// ---------------------------------------------------------------------------

struct MinimalPolynomial {
    const char* name;
    // coeffs[i] is the z-polynomial multiplying y^i, low z-degree first
    std::vector<std::vector<long>> coeffs;
};

// y = domino counting series: quadratic candidate that must FAIL (it picks
// the wrong algebraic branch family).
inline const MinimalPolynomial& domino_quadratic_candidate() {
    static const MinimalPolynomial p{
        "domino-quadratic-candidate",
        {{-1, 4}, {0, 1, -4}, {0, 0, 0, 1}}};
    return p;
}

// y = domino counting series: the cubic it does satisfy.
inline const MinimalPolynomial& domino_minimal_cubic() {
    static const MinimalPolynomial p{
        "domino-cubic",
        {{-1, 8}, {1, -10, 12}, {0, 0, 2, 6}, {0, 0, 0, 0, 1}}};
    return p;
}

// y = total-leaf-count series (mark derivative at 1 of the leaf series).
inline const MinimalPolynomial& leaf_total_cubic() {
    static const MinimalPolynomial p{
        "leaf-total-cubic",
        {{0, 1}, {-1, 5}, {0, 0, 5}, {0, 0, 0, 1}}};
    return p;
}

// y = second factorial moment of the leaf count.
inline const MinimalPolynomial& leaf_second_moment_cubic() {
    static const MinimalPolynomial p{
        "leaf-second-moment-cubic",
        {{0, 0, -8, 64, -120, -64, -8},
         {4, -68, 408, -972, 472, 744, 144},
         {0, 0, 24, -338, 1500, -1978, -864},
         {0, 0, 0, -16, 232, -1093, 1728}}};
    return p;
}

// y = total-empty-strip-count series.
inline const MinimalPolynomial& strip_total_cubic() {
    static const MinimalPolynomial p{
        "strip-total-cubic",
        {{0, 0, 0, -1}, {1, -10, 25, -10}, {0, 0, -2, -15}, {0, 0, 0, 0, 1}}};
    return p;
}

// y = second factorial moment of the empty-strip count.
inline const MinimalPolynomial& strip_second_moment_cubic() {
    static const MinimalPolynomial p{
        "strip-second-moment-cubic",
        {{0, 0, 0, 0, 128, -1704, 7344, -10968, 5752, -512},
         {-64, 1684, -17884, 97720, -289644, 450604, -329100, 90704, -6144},
         {0, 0, -64, 248, 5514, -39940, 75464, -3456},
         {0, 0, 0, 0, -16, 232, -1093, 1728}}};
    return p;
}

// Evaluate P(y, z) on a truncated series; true iff it vanishes to that order.
inline bool check_minimal_polynomial(const IntSeries& y, const MinimalPolynomial& P) {
    const int N = y.order;
    IntSeries acc(N);
    IntSeries ypow = IntSeries::one(N);
    for (size_t i = 0; i < P.coeffs.size(); ++i) {
        if (i > 0) ypow = ypow * y;
        const auto& zc = P.coeffs[i];
        for (size_t j = 0; j < zc.size(); ++j) {
            if (zc[j] == 0) continue;
            IntSeries term = ypow.shifted_z(static_cast<int>(j));
            for (int k = 0; k <= N; ++k)
                acc.a[static_cast<size_t>(k)] += term.a[static_cast<size_t>(k)] * BigInt(zc[j]);
        }
    }
    for (const BigInt& c : acc.a)
        if (c != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Closed forms for the same quantities, used as independent cross-checks.
// ---------------------------------------------------------------------------

// Number of dominoes of size n: 2 (3n+3)! / ((n+2)! (2n+3)!).
inline BigInt domino_count_formula(long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    BigInt num = 2 * factorial(3 * n + 3);
    BigInt den = factorial(n + 2) * factorial(2 * n + 3);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    assert(r == 0);
    return q;
}

// Total leaves over all dominoes of size n: 5 (3n+1)! / ((n-1)! (2n+3)!).
inline BigInt leaf_total_formula(long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    if (n == 0) return 0;
    BigInt num = 5 * factorial(3 * n + 1);
    BigInt den = factorial(n - 1) * factorial(2 * n + 3);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    assert(r == 0);
    return q;
}

// Total empty strips over all dominoes of size n: 10 (3n)! / ((n-3)! (2n+4)!).
inline BigInt strip_total_formula(long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    if (n < 3) return 0;
    BigInt num = 10 * factorial(3 * n);
    BigInt den = factorial(n - 3) * factorial(2 * n + 4);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    assert(r == 0);
    return q;
}

// Mean leaf count of a uniform size-n domino: 5n(n+2) / (6(3n+2)).
inline Rational expected_leaves(long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    Rational r(BigInt(5 * n * (n + 2)), BigInt(6 * (3 * n + 2)));
    r.canonicalize();
    return r;
}

// Mean empty-strip count: 5n(n-1)(n-2) / (6(3n+1)(3n+2)).
inline Rational expected_empty_strips(long n) {
    if (n < 0) throw std::invalid_argument("size must be >= 0");
    Rational r(BigInt(5 * n * (n - 1) * (n - 2)), BigInt(6 * (3 * n + 1) * (3 * n + 2)));
    r.canonicalize();
    return r;
}

}  // namespace staircase
