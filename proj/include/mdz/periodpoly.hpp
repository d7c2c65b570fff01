#pragma once

#include <mdz/matrix.hpp>

#include <stdexcept>
#include <vector>

namespace mdz {

// Homogeneous two-variable polynomial of degree k-2 with exact coefficients:
// P = sum_i a[i] X^i Y^{k-2-i}, a.size() == k-1.
struct HomPoly2 {
    long k = 2;
    std::vector<Rational> a;

    HomPoly2() : a(1, Rational(0)) {}
    explicit HomPoly2(long k_) : k(k_), a(static_cast<std::size_t>(k_ - 1), Rational(0)) {
        if (k_ < 2) throw std::invalid_argument("HomPoly2 needs k >= 2");
    }

    long degree() const { return k - 2; }
    const Rational& coeff_x(long i) const { return a[static_cast<std::size_t>(i)]; }

    bool operator==(const HomPoly2& o) const { return k == o.k && a == o.a; }

    HomPoly2& operator+=(const HomPoly2& o) {
        if (k != o.k) throw std::invalid_argument("degree mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    HomPoly2& operator-=(const HomPoly2& o) {
        if (k != o.k) throw std::invalid_argument("degree mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    friend HomPoly2 operator+(HomPoly2 x, const HomPoly2& y) { return x += y; }
    friend HomPoly2 operator-(HomPoly2 x, const HomPoly2& y) { return x -= y; }

    bool is_zero() const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
};

// Integer 2x2 matrix acting on (X, Y); determinant +-1 for the group
// generated by T, M and the sign flip eps.
struct GroupElement {
    long a = 1, b = 0, c = 0, d = 1;

    GroupElement mul(const GroupElement& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    long det() const { return a * d - b * c; }
};

inline GroupElement gamma_identity() { return {1, 0, 0, 1}; }
inline GroupElement gamma_T() { return {1, 1, 0, 1}; }
inline GroupElement gamma_M() { return {-1, -1, 2, 1}; }
inline GroupElement gamma_eps() { return {-1, 0, 0, 1}; }

// Right action P|g = P(aX+bY, cX+dY); act(act(P,g),h) = act(P, g*h).
inline HomPoly2 act(const HomPoly2& P, const GroupElement& g) {
    const long n = P.degree();
    HomPoly2 out(P.k);
    // powers of (aX+bY) and (cX+dY) by increasing exponent
    std::vector<std::vector<Rational>> top(n + 1), bot(n + 1);
    top[0] = {Rational(1)};
    bot[0] = {Rational(1)};
    for (long e = 1; e <= n; ++e) {
        top[e].assign(e + 1, Rational(0));
        bot[e].assign(e + 1, Rational(0));
        for (long p = 0; p < e; ++p) {
            top[e][p] += top[e - 1][p] * g.b;      // pick bY
            top[e][p + 1] += top[e - 1][p] * g.a;  // pick aX
            bot[e][p] += bot[e - 1][p] * g.d;
            bot[e][p + 1] += bot[e - 1][p] * g.c;
        }
    }
    for (long i = 0; i <= n; ++i) {
        const Rational& ci = P.a[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        const auto& u = top[i];
        const auto& v = bot[n - i];
        for (long p = 0; p <= i; ++p) {
            if (u[p] == 0) continue;
            for (long q = 0; q <= n - i; ++q) {
                if (v[q] == 0) continue;
                out.a[static_cast<std::size_t>(p + q)] += ci * u[p] * v[q];
            }
        }
    }
    return out;
}

// P | (1 - T)(1 + M) = P + P|M - P|T - P|TM.
inline HomPoly2 period_relation(const HomPoly2& P) {
    HomPoly2 out = P;
    out += act(P, gamma_M());
    out -= act(P, gamma_T());
    out -= act(P, gamma_T().mul(gamma_M()));
    return out;
}

// Matrix of the period relation restricted to the monomials X^i Y^{k-2-i},
// i running over `exponents`; rows are the k-1 coefficients of the image.
inline RatMatrix period_relation_matrix(long k, const std::vector<long>& exponents) {
    RatMatrix m(static_cast<std::size_t>(k - 1), exponents.size());
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        HomPoly2 mono(k);
        mono.a[static_cast<std::size_t>(exponents[j])] = 1;
        HomPoly2 img = period_relation(mono);
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(k); ++i) m(i, j) = img.a[i];
    }
    return m;
}

// Basis of W_k^{+,0}: even interior exponents 2..k-4 with the period
// relation, computed as a kernel. Basis vectors come out of the canonical
// echelon kernel, so the export order is stable.
struct PeriodSpace {
    long k = 2;
    std::vector<HomPoly2> basis;
};

inline std::vector<long> even_interior_exponents(long k) {
    std::vector<long> e;
    for (long i = 2; i <= k - 4; i += 2) e.push_back(i);
    return e;
}

inline PeriodSpace wk_plus0(long k) {
    if (k < 4 || k % 2) throw std::invalid_argument("wk_plus0 needs even k >= 4");
    PeriodSpace ps;
    ps.k = k;
    auto exps = even_interior_exponents(k);
    if (exps.empty()) return ps;
    auto kb = kernel_basis(period_relation_matrix(k, exps));
    for (const auto& v : kb) {
        HomPoly2 p(k);
        for (std::size_t j = 0; j < exps.size(); ++j)
            p.a[static_cast<std::size_t>(exps[j])] = v[j];
        ps.basis.push_back(std::move(p));
    }
    return ps;
}

// Full W_k (all monomials), used for the eps-stability check.
inline std::vector<HomPoly2> wk_full(long k) {
    std::vector<long> exps;
    for (long i = 0; i <= k - 2; ++i) exps.push_back(i);
    std::vector<HomPoly2> out;
    for (const auto& v : kernel_basis(period_relation_matrix(k, exps))) {
        HomPoly2 p(k);
        for (std::size_t j = 0; j < v.size(); ++j) p.a[j] = v[j];
        out.push_back(std::move(p));
    }
    return out;
}

// Standard dimension formula for cusp forms of even weight k >= 4 on the
// index-3 congruence subgroup of level 2: genus 0, one elliptic point of
// order 2, two cusps. Simplifies to floor(k/4) - 1.
inline long dim_cusp_forms_gamma0_2(long k) {
    if (k % 2) return 0;
    if (k < 4) return 0;
    const long genus = 0, nu2 = 1, cusps = 2;
    return (k - 1) * (genus - 1) + (k / 4) * nu2 + (k / 2 - 1) * cusps;
}

// Coefficient-condition description of W_k^{+,0}. The description carries a
// dangling index; this is the reading where the summation index i labels the
// coefficient a_i: row per odd j in 1..k-3, column per even interior
// exponent i, entry C(i,j) - C(i,k-2-j).
inline RatMatrix prop32_matrix(long k) {
    if (k < 8 || k % 2) throw std::invalid_argument("prop32_matrix needs even k >= 8");
    auto exps = even_interior_exponents(k);
    std::vector<long> js;
    for (long j = 1; j <= k - 3; j += 2) js.push_back(j);
    RatMatrix m(js.size(), exps.size());
    for (std::size_t r = 0; r < js.size(); ++r)
        for (std::size_t c = 0; c < exps.size(); ++c)
            m(r, c) = binom_q(exps[c], js[r]) - binom_q(exps[c], k - 2 - js[r]);
    return m;
}

// The verbatim reading puts the sum over i on a scalar multiplying the
// single coefficient a_{k-2-j}; that index is odd, and the space only has
// even-exponent coefficients, so every condition is vacuous and the
// constraint matrix on the even interior coordinates is zero.
inline long prop32_verbatim_kernel_dim(long k) {
    return static_cast<long>(even_interior_exponents(k).size());
}

// Second repair of the dangling index: the coefficient inside the sum is
// a_{k-2-i}. This reading's kernel coincides with the period-relation
// kernel itself; the a_i reading gives the same space with X and Y
// exchanged. Both are reported by the verification driver.
inline RatMatrix prop32_matrix_mirror(long k) {
    if (k < 8 || k % 2) throw std::invalid_argument("prop32_matrix_mirror needs even k >= 8");
    auto exps = even_interior_exponents(k);
    std::vector<long> js;
    for (long j = 1; j <= k - 3; j += 2) js.push_back(j);
    RatMatrix m(js.size(), exps.size());
    for (std::size_t r = 0; r < js.size(); ++r)
        for (std::size_t c = 0; c < exps.size(); ++c)
            m(r, c) = binom_q(k - 2 - exps[c], js[r]) - binom_q(k - 2 - exps[c], k - 2 - js[r]);
    return m;
}

// Matrix of the map sending zeta(n1 bar) (x) zeta(n2 bar), n1, n2 >= 3 odd,
// n1 + n2 = N, to the coefficient-extraction functional
//   (2^{n2-1}-1)/(2^{n2}-1) * v(n1, n2)
// written in the dual basis of the computed W_N^{+,0} basis: entry (row, l)
// is the functional evaluated on basis polynomial l.
//
// The functional extracts the X^{n2-1} Y^{n1-1} coefficient. With the
// opposite exponent assignment (X^{n1-1} Y^{n2-1}) the composite with the
// derivation matrix does not vanish and the sequence fails to be exact at
// the middle; the transposed extraction is the orientation compatible with
// the relation kernel.
inline RatMatrix D_matrix(long N, const PeriodSpace& ps) {
    if (N < 6 || N % 2) throw std::invalid_argument("D_matrix needs even N >= 6");
    std::vector<long> n1s;
    for (long n1 = 3; n1 <= N - 3; n1 += 2) n1s.push_back(n1);
    RatMatrix m(n1s.size(), ps.basis.size());
    for (std::size_t r = 0; r < n1s.size(); ++r) {
        const long n1 = n1s[r], n2 = N - n1;
        const Rational scale = (pow2q(n2 - 1) - 1) / (pow2q(n2) - 1);
        for (std::size_t l = 0; l < ps.basis.size(); ++l)
            m(r, l) = scale * ps.basis[l].coeff_x(n2 - 1);
    }
    return m;
}

}  // namespace mdz
