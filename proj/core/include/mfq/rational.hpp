#pragma once

#include <gmpxx.h>
#include <string>

namespace mfq {

// Exact rational scalar. GMP keeps the canonical invariants for us:
// always reduced, denominator > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational factorial(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace mfq
