#pragma once

#include <mdz/words.hpp>

#include <stdexcept>
#include <vector>

namespace mdz {

// Depth-one generator of the depth-graded motivic Lie algebra, as a Lie
// polynomial in the three-letter word algebra.
struct SigmaGenerator {
    std::size_t n;  // labels the generator of weight 2n+1
    NcPoly body;    // homogeneous, weight 2n+1, depth 1
};

// sigma_bar(0) = e_{-1};
// sigma_bar(n) = (1-2^{2n}) ad(e0)^{2n} e_{-1} + 2^{2n} ad(e0)^{2n} e_1
// written out with binomial coefficients.
inline SigmaGenerator sigma_bar(std::size_t n) {
    SigmaGenerator g;
    g.n = n;
    if (n == 0) {
        g.body = NcPoly(Word{Letter::XM1});
        return g;
    }
    const long two_n = static_cast<long>(2 * n);
    const Rational cm = Rational(1) - pow2q(two_n);  // on e_{-1}
    const Rational cp = pow2q(two_n);                // on e_1
    for (long r = 0; r <= two_n; ++r) {
        Rational b = binom_q(two_n, r);
        if (r % 2) b = -b;
        Word wm, wp;
        for (long k = 0; k < two_n - r; ++k) wm.push_back(Letter::X0);
        wp = wm;
        wm.push_back(Letter::XM1);
        wp.push_back(Letter::X1);
        for (long k = 0; k < r; ++k) {
            wm.push_back(Letter::X0);
            wp.push_back(Letter::X0);
        }
        g.body.add_term(wm, cm * b);
        g.body.add_term(wp, cp * b);
    }
    return g;
}

namespace detail {

// a o e_1 = a e_1 + e_1 a*;  a o e_{-1} = ([-1]a) e_{-1} + e_{-1} ([-1]a)*.
inline NcPoly circ_letter(const NcPoly& a, Letter l) {
    if (l == Letter::X1) {
        NcPoly out = concat(a, NcPoly(Word{Letter::X1}));
        out += concat(NcPoly(Word{Letter::X1}), star(a));
        return out;
    }
    NcPoly ta = tau(a);
    NcPoly out = concat(ta, NcPoly(Word{Letter::XM1}));
    out += concat(NcPoly(Word{Letter::XM1}), star(ta));
    return out;
}

}  // namespace detail

// Ihara circle action of a on a single word, by the recursion
//   a o (e0^n e_i w) = e0^n (a o e_i) w + e0^n e_i (a o w)
// with the pure-zero tail rule a o e0^n = e0^n a (n = 0 included).
inline NcPoly circ(const NcPoly& a, const Word& w) {
    std::size_t z = 0;
    while (z < w.size() && w[z] == Letter::X0) ++z;
    if (z == w.size()) {
        // all zeros (possibly empty): e0^n a
        NcPoly out;
        for (const auto& [wa, ca] : a.terms()) {
            Word v(w.begin(), w.end());
            v.insert(v.end(), wa.begin(), wa.end());
            out.add_term(v, ca);
        }
        return out;
    }
    const Letter li = w[z];
    Word head(w.begin(), w.begin() + z);       // e0^z
    Word rest(w.begin() + z + 1, w.end());     // after e_i

    NcPoly out;
    NcPoly mid = detail::circ_letter(a, li);
    for (const auto& [wm, cm] : mid.terms()) {
        Word v = head;
        v.insert(v.end(), wm.begin(), wm.end());
        v.insert(v.end(), rest.begin(), rest.end());
        out.add_term(v, cm);
    }
    Word head_i = head;
    head_i.push_back(li);
    NcPoly tail = circ(a, rest);
    for (const auto& [wt, ct] : tail.terms()) {
        Word v = head_i;
        v.insert(v.end(), wt.begin(), wt.end());
        out.add_term(v, ct);
    }
    return out;
}

inline NcPoly circ(const NcPoly& a, const NcPoly& w) {
    NcPoly out;
    for (const auto& [ww, cw] : w.terms()) {
        NcPoly p = circ(a, ww);
        p *= cw;
        out += p;
    }
    return out;
}

// Depth-graded dual derivation on the function side: the adjoint of
// y |-> sigma_bar(n) o y with respect to the orthonormal word pairing.
// Lowers weight by 2n+1 and depth by 1.
inline NcPoly dbar(std::size_t n, const NcPoly& v, std::size_t v_weight, std::size_t v_depth) {
    if (v_depth < 1) throw std::invalid_argument("dbar needs depth >= 1");
    if (v_weight < 2 * n + 1) throw std::invalid_argument("dbar needs weight >= 2n+1");
    const std::size_t out_w = v_weight - (2 * n + 1);
    const std::size_t out_d = v_depth - 1;
    const SigmaGenerator sg = sigma_bar(n);
    NcPoly out;
    for (const Word& y : all_words(out_w, out_d)) {
        NcPoly image = circ(sg.body, y);
        Rational c(0);
        for (const auto& [w, cw] : v.terms()) c += cw * coeff(image, w);
        out.add_term(y, c);
    }
    return out;
}

inline NcPoly dbar(std::size_t n, const Word& v) {
    return dbar(n, NcPoly(v), weight(v), depth(v));
}

enum class Parity { Even, Odd };

// Closed forms for the dual derivation on the two-block words
// e^{eps1}(e0)^{n1-1} e^{eps2}(e0)^{n2-1}, by case:
//   even n1,n2, n = 0  -> 0
//   even n1,n2, n >= 1 -> Theta-combinations
//   odd n1,n2,  n = 0  -> five-case table
//   odd n1,n2,  n >= 1 -> Theta-combinations with delta corrections
inline NcPoly closed_dbar_depth2(Parity parity, int eps1, int eps2, long n1, long n2,
                                 std::size_t n) {
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("signs must be +-1");
    if (n1 < 1 || n2 < 1 || n1 + n2 < static_cast<long>(2 * n + 2))
        throw std::invalid_argument("closed_dbar_depth2 needs n1+n2 >= 2n+2");
    const bool even = parity == Parity::Even;
    if (even && (n1 % 2 != 0 || n2 % 2 != 0))
        throw std::invalid_argument("even case needs even n1, n2");
    if (!even && (n1 % 2 == 0 || n2 % 2 == 0))
        throw std::invalid_argument("odd case needs odd n1, n2");

    const long s = n1 + n2 - static_cast<long>(2 * n) - 2;
    auto theta = [&](int sign, long ni) {
        // C(2n, ni-1) e^{sign} (e0)^s
        return NcPoly(block_word({sign}, {static_cast<int>(s)}),
                      binom_q(static_cast<long>(2 * n), ni - 1));
    };

    if (n == 0) {
        if (even) return NcPoly::zero();  // no adjacent-letter terms exist
        // Odd, depth-one action. Two mechanisms contribute: the first-pair
        // interaction when n1 = 1 and the trailing interaction when n2 = 1.
        // They overlap additively at (n1, n2) = (1, 1).
        NcPoly out;
        if (n1 == 1 && eps1 == 1 && eps2 == -1) {
            out.add_term(block_word({1}, {static_cast<int>(n2 - 1)}), Rational(-1));
            out.add_term(block_word({-1}, {static_cast<int>(n2 - 1)}), Rational(1));
        }
        if (n1 == 1 && eps1 == -1 && eps2 == 1) {
            out.add_term(block_word({1}, {static_cast<int>(n2 - 1)}), Rational(1));
            out.add_term(block_word({-1}, {static_cast<int>(n2 - 1)}), Rational(-1));
        }
        if (n2 == 1 && eps1 == 1 && eps2 == -1)
            out.add_term(block_word({1}, {static_cast<int>(n1 - 1)}), Rational(1));
        if (n2 == 1 && eps1 == -1 && eps2 == -1)
            out.add_term(block_word({-1}, {static_cast<int>(n1 - 1)}), Rational(1));
        return out;
    }

    const Rational p2 = pow2q(static_cast<long>(2 * n));  // 2^{2n}
    const Rational q2 = Rational(1) - p2;                 // 1 - 2^{2n}
    const bool dl = (static_cast<long>(2 * n) == n1 - 1);

    NcPoly out;
    if (even) {
        if (eps1 == 1 && eps2 == 1) {
            out = p2 * (theta(1, n1) - theta(1, n2));
        } else if (eps1 == 1 && eps2 == -1) {
            out = q2 * (theta(1, n1) - theta(1, n2));
        } else if (eps1 == -1 && eps2 == 1) {
            out = q2 * theta(-1, n1) - p2 * theta(-1, n2);
        } else {
            out = p2 * theta(-1, n1) - q2 * theta(-1, n2);
        }
        return out;
    }
    // odd parity, n >= 1
    if (eps1 == 1 && eps2 == 1) {
        out = theta(1, n1) - theta(1, n2);
        if (dl) out -= theta(1, n1);
        out *= -p2;
    } else if (eps1 == 1 && eps2 == -1) {
        out = theta(1, n1) - theta(1, n2);
        if (dl) out -= theta(-1, n1);
        out *= -q2;
    } else if (eps1 == -1 && eps2 == 1) {
        out = theta(-1, n1);
        if (dl) out -= theta(1, n1);
        out *= -q2;
        out += p2 * theta(-1, n2);
    } else {
        out = theta(-1, n1);
        if (dl) out -= theta(-1, n1);
        out *= -p2;
        out += q2 * theta(-1, n2);
    }
    return out;
}

}  // namespace mdz
