#pragma once

// Dense polynomials over an exact ring, nestable for multi-mark coefficients.

#include <stdexcept>
#include <vector>

#include "staircase/bigint.hpp"

namespace staircase {

template <class R>
struct Poly;

template <class R>
struct RingOps {
    static R zero() { return R(0); }
    static R one() { return R(1); }
    static bool is_zero(const R& x) { return x == 0; }
};

template <class R>
struct RingOps<Poly<R>> {
    static Poly<R> zero() { return Poly<R>{}; }
    static Poly<R> one() { return Poly<R>::constant(RingOps<R>::one()); }
    static bool is_zero(const Poly<R>& p) { return p.c.empty(); }
};

// Invariant: no trailing zero coefficients (the zero polynomial is empty).
template <class R>
struct Poly {
    std::vector<R> c;

    static Poly constant(R v) {
        Poly p;
        if (!RingOps<R>::is_zero(v)) p.c.push_back(std::move(v));
        return p;
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return RingOps<R>::zero();
        return c[static_cast<size_t>(i)];
    }

    void trim() {
        while (!c.empty() && RingOps<R>::is_zero(c.back())) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), RingOps<R>::zero());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
        r.trim();
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r;
        r.c.resize(std::max(c.size(), o.c.size()), RingOps<R>::zero());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
        r.trim();
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r;
        if (c.empty() || o.c.empty()) return r;
        r.c.resize(c.size() + o.c.size() - 1, RingOps<R>::zero());
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        r.trim();
        return r;
    }

    // multiply by the polynomial variable
    Poly shifted_up() const {
        if (c.empty()) return Poly{};
        Poly r;
        r.c.reserve(c.size() + 1);
        r.c.push_back(RingOps<R>::zero());
        r.c.insert(r.c.end(), c.begin(), c.end());
        return r;
    }

    // (p - p(0)) / var
    Poly shifted_down_dropping_const() const {
        Poly r;
        if (c.size() <= 1) return r;
        r.c.assign(c.begin() + 1, c.end());
        return r;
    }

    R const_term() const { return coeff(0); }

    Poly truncated(int maxdeg) const {
        Poly r = *this;
        if (static_cast<int>(r.c.size()) > maxdeg + 1) r.c.resize(static_cast<size_t>(maxdeg) + 1);
        r.trim();
        return r;
    }

    Poly derivative() const {
        Poly r;
        for (int i = 1; i <= degree(); ++i) r.c.push_back(c[static_cast<size_t>(i)] * R(i));
        r.trim();
        return r;
    }

    R eval_at_one() const {
        R s = RingOps<R>::zero();
        for (const R& x : c) s = s + x;
        return s;
    }
};

using IntPoly = Poly<BigInt>;

}  // namespace staircase
