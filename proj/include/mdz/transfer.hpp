#pragma once

#include <mdz/rational.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mdz {

// Homogeneous polynomial in x1, x2 of total degree N-2:
// c[a] is the coefficient of x1^a x2^{N-2-a}.
struct BiPoly {
    long N = 2;
    std::vector<Rational> c;

    BiPoly() : c(1, Rational(0)) {}
    explicit BiPoly(long N_) : N(N_), c(static_cast<std::size_t>(N_ - 1), Rational(0)) {
        if (N_ < 2) throw std::invalid_argument("BiPoly needs N >= 2");
    }

    static BiPoly monomial(long N_, long e1) {
        BiPoly p(N_);
        p.c[static_cast<std::size_t>(e1)] = 1;
        return p;
    }

    long degree() const { return N - 2; }
    const Rational& coeff(long e1) const { return c[static_cast<std::size_t>(e1)]; }

    bool operator==(const BiPoly& o) const { return N == o.N && c == o.c; }
    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    BiPoly& operator+=(const BiPoly& o) {
        if (N != o.N) throw std::invalid_argument("degree mismatch");
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        if (N != o.N) throw std::invalid_argument("degree mismatch");
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    BiPoly& operator*=(const Rational& s) {
        for (auto& v : c) v *= s;
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
};

// p(u1 x1 + u2 x2, v1 x1 + v2 x2), exact; half-integer substitutions stay
// exact because the coefficients absorb the powers of 1/2.
inline BiPoly bipoly_subst(const BiPoly& p, const Rational& u1, const Rational& u2,
                           const Rational& v1, const Rational& v2) {
    const long n = p.degree();
    BiPoly out(p.N);
    std::vector<std::vector<Rational>> up(n + 1), vp(n + 1);
    up[0] = {Rational(1)};
    vp[0] = {Rational(1)};
    for (long e = 1; e <= n; ++e) {
        up[e].assign(e + 1, Rational(0));
        vp[e].assign(e + 1, Rational(0));
        for (long q = 0; q < e; ++q) {
            up[e][q] += up[e - 1][q] * u2;
            up[e][q + 1] += up[e - 1][q] * u1;
            vp[e][q] += vp[e - 1][q] * v2;
            vp[e][q + 1] += vp[e - 1][q] * v1;
        }
    }
    for (long a = 0; a <= n; ++a) {
        const Rational& ca = p.c[static_cast<std::size_t>(a)];
        if (ca == 0) continue;
        const auto& u = up[a];
        const auto& v = vp[n - a];
        for (long s = 0; s <= a; ++s) {
            if (u[s] == 0) continue;
            for (long t = 0; t <= n - a; ++t) {
                if (v[t] == 0) continue;
                out.c[static_cast<std::size_t>(s + t)] += ca * u[s] * v[t];
            }
        }
    }
    return out;
}

// L_{1,1}(p) = p(x1,x2) + p(x1-x2,x1) - p(x1-x2,x2)
inline BiPoly L11(const BiPoly& p) {
    BiPoly out = p;
    out += bipoly_subst(p, 1, -1, 1, 0);
    out -= bipoly_subst(p, 1, -1, 0, 1);
    return out;
}

// L_{1/2,1}(p) = p(x1/2,x2) + p((x1-x2)/2,x1) - p((x1-x2)/2,x2)
inline BiPoly Lhalf1(const BiPoly& p) {
    BiPoly out = bipoly_subst(p, rat(1, 2), 0, 0, 1);
    out += bipoly_subst(p, rat(1, 2), rat(-1, 2), 1, 0);
    out -= bipoly_subst(p, rat(1, 2), rat(-1, 2), 0, 1);
    return out;
}

// i^{od}(p) = p(x1,x2) - p(-x1,x2): twice the odd-in-x1 part
inline BiPoly i_od(const BiPoly& p) {
    BiPoly out = p;
    out -= bipoly_subst(p, -1, 0, 0, 1);
    return out;
}

// j1: x1 -> (x1+x2)/2, x2 -> x2;  j2: x1 -> (x1+x2)/2, x2 -> x1
inline BiPoly j1_map(const BiPoly& p) { return bipoly_subst(p, rat(1, 2), rat(1, 2), 0, 1); }
inline BiPoly j2_map(const BiPoly& p) { return bipoly_subst(p, rat(1, 2), rat(1, 2), 1, 0); }

// j = (1/2) i^{od} (j1 - j2)
inline BiPoly j_map(const BiPoly& p) {
    BiPoly d = j1_map(p) - j2_map(p);
    BiPoly out = i_od(d);
    out *= rat(1, 2);
    return out;
}

// d(m1,m2; n1,n2): coefficient of x1^{n1-1} x2^{n2-1}, n_i even >= 2, in
// (1/2) j(x1^{m1-1} x2^{m2-1}).
inline std::map<std::pair<long, long>, Rational> d_coeffs(long m1, long m2, long N) {
    if (m1 + m2 != N || m1 < 1 || m2 < 1) throw std::invalid_argument("d_coeffs needs m1+m2=N");
    BiPoly half_j = j_map(BiPoly::monomial(N, m1 - 1));
    half_j *= rat(1, 2);
    std::map<std::pair<long, long>, Rational> out;
    for (long n1 = 2; n1 <= N - 2; n1 += 2) {
        const long n2 = N - n1;
        if (n2 < 2 || n2 % 2) continue;
        out[{n1, n2}] = half_j.coeff(n1 - 1);
    }
    return out;
}

}  // namespace mdz
