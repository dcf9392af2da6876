#pragma once

// Truncated Taylor jets: carry a value together with its first K derivatives
// (as Taylor coefficients) through arithmetic.  Nesting a jet inside a jet
// gives mixed partials, which is how the q-derivatives of the z-transformed
// H functions are obtained without any hand-written derivative formulas.

#include <array>
#include <cmath>

namespace staircase {

template <class T, int K>
struct Jet {
    std::array<T, K + 1> a{};  // a[k] = f^(k) / k!

    Jet() = default;
    Jet(int v) { a[0] = T(v); }
    Jet(const T& v) { a[0] = v; }

    static Jet variable(const T& v) {
        Jet j(v);
        if constexpr (K >= 1) j.a[1] = T(1);
        return j;
    }

    const T& value() const { return a[0]; }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k <= K; ++k) r.a[k] = -a[k];
        return r;
    }
    Jet& operator+=(const Jet& o) {
        for (int k = 0; k <= K; ++k) a[k] += o.a[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k <= K; ++k) a[k] -= o.a[k];
        return *this;
    }
    Jet operator+(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= K; ++k) r.a[k] = a[k] + o.a[k];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (int k = 0; k <= K; ++k) r.a[k] = a[k] - o.a[k];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j) r.a[i + j] += a[i] * o.a[j];
        return r;
    }
    Jet operator/(const Jet& o) const {
        Jet r;
        r.a[0] = a[0] / o.a[0];
        for (int k = 1; k <= K; ++k) {
            T s = a[k];
            for (int i = 1; i <= k; ++i) s -= o.a[i] * r.a[k - i];
            r.a[k] = s / o.a[0];
        }
        return r;
    }
};

template <class T, int K>
Jet<T, K> sqrt(const Jet<T, K>& x) {
    using std::sqrt;
    Jet<T, K> r;
    r.a[0] = sqrt(x.a[0]);
    for (int k = 1; k <= K; ++k) {
        T s = x.a[k];
        for (int i = 1; i < k; ++i) s -= r.a[i] * r.a[k - i];
        r.a[k] = s / (T(2) * r.a[0]);
    }
    return r;
}

}  // namespace staircase
