#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mdz {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is the canonical form assumed everywhere below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise (GMP's canonical rendering).
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// 2^e for any integer e, exact.
inline Rational pow2q(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return Rational(1) / Rational(p);
}

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline Integer binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline Rational binom_q(long n, long k) { return Rational(binom(n, k)); }

}  // namespace mdz
