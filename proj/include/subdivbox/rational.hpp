#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace subdivbox {

using Rational = mpq_class;
using BigInt = mpz_class;

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 2^n as a rational, n may be negative.
inline Rational pow2q(long n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
    return n >= 0 ? Rational(p) : Rational(1, p);
}

inline Rational rat_pow(const Rational& q, long n) {
    if (n == 0) return 1;
    if (q == 0) {
        if (n < 0) throw std::domain_error("0 raised to a negative power");
        return 0;
    }
    Rational base = n < 0 ? Rational(1) / q : q;
    long e = n < 0 ? -n : n;
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

// Fixed-point decimal with `digits` fractional places, round half away from zero.
inline std::string rat_to_decimal(const Rational& q, int digits = 12) {
    Rational v = rat_abs(q);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt num = v.get_num() * scale * 2 + v.get_den();  // 2*scaled + 1 for rounding
    BigInt scaled = num / (v.get_den() * 2);
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (sgn(q) < 0 ? "-" : "") + s;
}

}  // namespace subdivbox
