#pragma once

// Exact arithmetic helpers shared by all modules.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace staircase {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// "p/q" (or plain "p" when the denominator is 1)
inline std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_fraction(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

}  // namespace staircase
