#pragma once

#include <mdz/ihara.hpp>
#include <mdz/matrix.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdz {

// Composition of a weight into positive parts; index of a (sum-odd) motivic
// multiple zeta value. All-odd tuples are the T_{N,r} index sets.
using IndexTuple = std::vector<long>;

inline long tuple_weight(const IndexTuple& t) {
    long s = 0;
    for (long p : t) s += p;
    return s;
}

inline bool tuple_all_odd(const IndexTuple& t) {
    for (long p : t)
        if (p < 1 || p % 2 == 0) return false;
    return true;
}

inline std::string tuple_str(const IndexTuple& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

// All compositions of N into r parts >= 1, lexicographic ascending.
inline std::vector<IndexTuple> all_compositions(long N, int r) {
    std::vector<IndexTuple> out;
    if (r <= 0 || N < r) return out;
    IndexTuple cur(r);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == r - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (long p = 1; left - p >= r - i - 1; ++p) {
            cur[i] = p;
            rec(i + 1, left - p);
        }
    };
    rec(0, N);
    return out;
}

// T_{N,r}: compositions of N into r odd parts >= 1, lexicographic ascending.
inline std::vector<IndexTuple> odd_compositions(long N, int r) {
    std::vector<IndexTuple> out;
    if (r <= 0) throw std::invalid_argument("odd_compositions needs r >= 1");
    if ((N - r) % 2 != 0 || N < r)
        throw std::invalid_argument("odd_compositions needs N >= r with N = r mod 2");
    IndexTuple cur(r);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == r - 1) {
            if (left >= 1 && left % 2 == 1) {
                cur[i] = left;
                out.push_back(cur);
            }
            return;
        }
        for (long p = 1; left - p >= r - i - 1; p += 2) {
            cur[i] = p;
            rec(i + 1, left - p);
        }
    };
    rec(0, N);
    return out;
}

// zeta^{o,m}(n1..nr) as a word combination:
//   (1/2^r) sum over sign vectors eps of eps_1...eps_r
//   e^{eps_1..eps_r}(e0)^{n1-1} e^{eps_2..eps_r}(e0)^{n2-1} ... e^{eps_r}(e0)^{nr-1}
inline NcPoly sum_odd_word(const IndexTuple& t) {
    const int r = static_cast<int>(t.size());
    if (r == 0) throw std::invalid_argument("sum_odd_word needs depth >= 1");
    for (long p : t)
        if (p < 1) throw std::invalid_argument("tuple parts must be >= 1");
    NcPoly out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        int sign = 1;
        std::vector<int> eps(r);
        for (int i = 0; i < r; ++i) {
            eps[i] = (mask >> i) & 1 ? -1 : 1;
            sign *= eps[i];
        }
        std::vector<int> suffix(r), gaps(r);
        int acc = 1;
        for (int i = r - 1; i >= 0; --i) {
            acc *= eps[i];
            suffix[i] = acc;
            gaps[i] = static_cast<int>(t[i] - 1);
        }
        out.add_term(block_word(suffix, gaps), Rational(sign) / pow2q(r));
    }
    return out;
}

// The two-term reduced form (free single signs on letters 2..r); equals
// sum_odd_word, which the test suite checks.
inline NcPoly sum_odd_word_reduced(const IndexTuple& t) {
    const int r = static_cast<int>(t.size());
    if (r == 0) throw std::invalid_argument("sum_odd_word needs depth >= 1");
    NcPoly out;
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> signs(r), gaps(r);
        for (int i = 1; i < r; ++i) signs[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
        for (int i = 0; i < r; ++i) gaps[i] = static_cast<int>(t[i] - 1);
        signs[0] = 1;
        out.add_term(block_word(signs, gaps), Rational(1) / pow2q(r));
        signs[0] = -1;
        out.add_term(block_word(signs, gaps), Rational(-1) / pow2q(r));
    }
    return out;
}

// Reduction of a depth-one block word e^{eps}(e0)^s to the zeta(m bar) basis
// of odd labels m = s+1.
//   e^{-1}(e0)^s -> zeta(s+1 bar)
//   e^{+1}(e0)^s -> zeta(s+1)  =  zeta(s+1 bar) / (2^{-s} - 1)   (s > 0)
// The motivic zeta(1) vanishes, and even labels are products (powers of
// zeta(2) up to rationals), which die in the depth-graded pieces the
// matrices below are read in; both reduce to coefficient 0.
struct DepthOneReduction {
    Rational coeff;
    long basis_m;  // label of zeta(m bar); meaningful when coeff != 0
};

inline DepthOneReduction depth1_reduce(const Word& w) {
    if (depth(w) != 1 || w.empty() || w[0] == Letter::X0)
        throw std::invalid_argument("depth1_reduce needs a word e^{eps}(e0)^s");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != Letter::X0)
            throw std::invalid_argument("depth1_reduce needs a word e^{eps}(e0)^s");
    const long s = static_cast<long>(w.size()) - 1;
    const long m = s + 1;
    if (m % 2 == 0) return {Rational(0), m};
    if (w[0] == Letter::XM1) return {Rational(1), m};
    if (s == 0) return {Rational(0), 1};  // motivic zeta(1) = 0
    return {Rational(1) / (pow2q(-s) - 1), m};
}

// Coefficient of zeta(W bar) in the class of a homogeneous depth-one
// polynomial of odd weight W.
inline Rational gr1_coordinate(const NcPoly& P, long W) {
    if (W % 2 == 0) {
        if (!P.is_zero())
            throw std::domain_error("even-weight depth-one class is not representable");
        return Rational(0);
    }
    Rational c(0);
    for (const auto& [w, cw] : P.terms()) {
        if (static_cast<long>(weight(w)) != W || depth(w) != 1)
            throw std::domain_error("gr1_coordinate needs homogeneous depth-one input");
        auto red = depth1_reduce(w);
        c += cw * red.coeff;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Closed-form partial derivations.
//
// partial_closed(n, t) returns the coordinates of the degree-(2n+1) component
// of the derivation applied to zeta^{o,m}(t), expressed over the depth-(r-1)
// basis: tuples in T_{W,r-1} for r >= 3, the single label {W} for r = 2
// (W = weight(t) - 2n - 1).
// ---------------------------------------------------------------------------

// depth 2, both parities (mixed parity has no closed form and is rejected)
inline Rational partial2_closed(std::size_t n, long n1, long n2) {
    const long s = n1 + n2 - static_cast<long>(2 * n) - 2;
    if (s < 0) throw std::invalid_argument("partial2_closed: weight too small");
    const bool odd = (n1 % 2 == 1 && n2 % 2 == 1);
    const bool even = (n1 % 2 == 0 && n2 % 2 == 0);
    if (!odd && !even)
        throw std::invalid_argument("partial2_closed: no closed form for mixed parity");
    if (even) {
        if (n == 0 || s == 0) return Rational(0);
        return (Rational(1) - pow2q(s + 1)) / (4 * (pow2q(s) - 1)) *
               (binom_q(2 * n, n1 - 1) - binom_q(2 * n, n2 - 1));
    }
    // odd-odd
    if (n == 0) {
        if (n1 == 1 && n2 == 1) return rat(1, 4);  // overlap of the two n=0 mechanisms
        if (n1 == 1) return (Rational(1) - pow2q(n2)) / (Rational(2) - pow2q(n2));
        if (n2 == 1) return -(Rational(1) - pow2q(n1)) / (4 * (Rational(1) - pow2q(n1 - 1)));
        return Rational(0);
    }
    const bool dl = (static_cast<long>(2 * n) == n1 - 1);
    if (s == 0) {
        if (!dl) return Rational(0);
        return -(pow2q(2 * n + 1) - 1) / 4;
    }
    Rational bracket = binom_q(2 * n, n1 - 1) - binom_q(2 * n, n2 - 1);
    if (dl) bracket += Rational(1) - pow2q(2 * n + 1);
    return (pow2q(s + 1) - 1) / (4 * (pow2q(s) - 1)) * bracket;
}

// depth r >= 3, all-odd tuples: deletion plus adjacent merges.
inline std::map<IndexTuple, Rational> partial3plus_closed(std::size_t n, const IndexTuple& k) {
    const int r = static_cast<int>(k.size());
    if (r < 3) throw std::invalid_argument("partial3plus_closed needs depth >= 3");
    if (!tuple_all_odd(k))
        throw std::invalid_argument("partial3plus_closed: closed form needs an all-odd tuple");
    const long m1 = static_cast<long>(2 * n) + 1;
    std::map<IndexTuple, Rational> out;
    auto add = [&](const IndexTuple& t, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = out.emplace(t, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    if (n == 0) {
        if (k.front() == 1) add(IndexTuple(k.begin() + 1, k.end()), Rational(-1));
        if (k.back() == 1) add(IndexTuple(k.begin(), k.end() - 1), rat(1, 2));
        return out;
    }
    if (k.front() == m1)
        add(IndexTuple(k.begin() + 1, k.end()), pow2q(m1 - 1) - rat(1, 2));
    for (int i = 0; i + 1 < r; ++i) {
        const long merged = k[i] + k[i + 1] - m1;
        if (merged < 1) continue;
        Rational c = (binom_q(2 * n, k[i + 1] - 1) - binom_q(2 * n, k[i] - 1)) / 2;
        if (c == 0) continue;
        IndexTuple t;
        t.reserve(r - 1);
        t.insert(t.end(), k.begin(), k.begin() + i);
        t.push_back(merged);
        t.insert(t.end(), k.begin() + i + 2, k.end());
        add(t, c);
    }
    return out;
}

inline std::map<IndexTuple, Rational> partial_closed(std::size_t n, const IndexTuple& t) {
    if (t.size() < 2) throw std::invalid_argument("partial_closed needs depth >= 2");
    if (t.size() == 2) {
        std::map<IndexTuple, Rational> out;
        Rational c = partial2_closed(n, t[0], t[1]);
        if (c != 0) out[{t[0] + t[1] - static_cast<long>(2 * n) - 1}] = c;
        return out;
    }
    return partial3plus_closed(n, t);
}

// ---------------------------------------------------------------------------
// Brute-force partial derivations and basis coordinates.
//
// GrBasis carries the word-level pipeline: the derivation matrix of the
// all-odd sum-odd basis at each (weight, depth), built from dbar plus the
// depth-one reduction, with coordinates of arbitrary classes recovered
// through the inverse (the derivation map is injective in depth >= 2).
// ---------------------------------------------------------------------------

class GrBasis {
public:
    // odd first labels m1 with a nonempty depth-(r-1) target space
    static std::vector<long> first_labels(long W, int r) {
        std::vector<long> ms;
        for (long m1 = 1; W - m1 >= r - 1; m1 += 2) ms.push_back(m1);
        return ms;
    }

    const std::vector<IndexTuple>& tuples(long W, int r) {
        auto key = std::make_pair(W, r);
        auto it = tuples_.find(key);
        if (it == tuples_.end()) it = tuples_.emplace(key, odd_compositions(W, r)).first;
        return it->second;
    }

    std::size_t tuple_index(long W, int r, const IndexTuple& t) {
        const auto& ts = tuples(W, r);
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it == ts.end() || *it != t)
            throw std::invalid_argument("tuple not in T_{" + std::to_string(W) + "," +
                                        std::to_string(r) + "}: " + tuple_str(t));
        return static_cast<std::size_t>(it - ts.begin());
    }

    // Coordinate vector of the derivation image of P (homogeneous weight W,
    // depth r) over the column basis: pairs (m1; depth-(r-1) basis element).
    std::vector<Rational> partial_vector(const NcPoly& P, long W, int r) {
        std::vector<Rational> v;
        for (long m1 : first_labels(W, r)) {
            const std::size_t n = static_cast<std::size_t>((m1 - 1) / 2);
            NcPoly img = P.is_zero() ? NcPoly() : dbar(n, P, W, r);
            const long Wp = W - m1;
            if (r == 2) {
                v.push_back(gr1_coordinate(img, Wp));
            } else {
                auto block = coordinates(img, Wp, r - 1);
                v.insert(v.end(), block.begin(), block.end());
            }
        }
        return v;
    }

    // Derivation matrix of the all-odd basis: rows T_{W,r}, columns the
    // (m1; basis) pairs, which also biject with T_{W,r}. Built once per
    // (W, r) from the word-level pipeline.
    const RatMatrix& basis_matrix(long W, int r) {
        auto key = std::make_pair(W, r);
        auto it = E_.find(key);
        if (it != E_.end()) return it->second;
        const auto& rows = tuples(W, r);
        RatMatrix m = partial_matrix_brute(W, r, rows);
        return E_.emplace(key, std::move(m)).first->second;
    }

    const RatMatrix& basis_matrix_inv(long W, int r) {
        auto key = std::make_pair(W, r);
        auto it = Einv_.find(key);
        if (it != Einv_.end()) return it->second;
        RatMatrix inv = inverse(basis_matrix(W, r));
        return Einv_.emplace(key, std::move(inv)).first->second;
    }

    // Coordinates of the class of P (homogeneous weight W, depth r) over the
    // all-odd sum-odd basis, via the injectivity of the derivation map:
    // c^T = partial_vector(P)^T E^{-1}.
    std::vector<Rational> coordinates(const NcPoly& P, long W, int r) {
        if (r == 1) {
            if (W % 2 == 0 && !P.is_zero())
                throw std::domain_error("even-weight depth-one class in coordinates()");
            if (W % 2 == 0) return {};
            return {gr1_coordinate(P, W)};
        }
        auto v = partial_vector(P, W, r);
        const RatMatrix& einv = basis_matrix_inv(W, r);
        const std::size_t n = einv.rows();
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (v[k] != 0) c[j] += v[k] * einv(k, j);
        return c;
    }

    // Derivation matrix for arbitrary rows (any parity), brute force. The
    // circle-action images are shared across rows per derivation degree.
    RatMatrix partial_matrix_brute(long W, int r, const std::vector<IndexTuple>& rows) {
        std::vector<NcPoly> sow(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (tuple_weight(rows[i]) != W || static_cast<int>(rows[i].size()) != r)
                throw std::invalid_argument("partial_matrix_brute: row shape mismatch");
            sow[i] = sum_odd_word(rows[i]);
        }
        std::vector<long> ms = first_labels(W, r);
        // column count
        std::size_t ncols = 0;
        std::vector<std::size_t> block_off;
        for (long m1 : ms) {
            block_off.push_back(ncols);
            ncols += (r == 2) ? 1 : tuples(W - m1, r - 1).size();
        }
        RatMatrix out(rows.size(), ncols);
        for (std::size_t bi = 0; bi < ms.size(); ++bi) {
            const long m1 = ms[bi];
            const std::size_t n = static_cast<std::size_t>((m1 - 1) / 2);
            auto imgs = dbar_batch(n, sow, W, r);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const long Wp = W - m1;
                if (r == 2) {
                    out(i, block_off[bi]) = gr1_coordinate(imgs[i], Wp);
                } else {
                    auto block = coordinates(imgs[i], Wp, r - 1);
                    for (std::size_t j = 0; j < block.size(); ++j)
                        out(i, block_off[bi] + j) = block[j];
                }
            }
        }
        return out;
    }

    // Same columns, entries from the closed forms.
    RatMatrix partial_matrix_closed(long W, int r, const std::vector<IndexTuple>& rows) {
        std::vector<long> ms = first_labels(W, r);
        std::size_t ncols = 0;
        std::vector<std::size_t> block_off;
        for (long m1 : ms) {
            block_off.push_back(ncols);
            ncols += (r == 2) ? 1 : tuples(W - m1, r - 1).size();
        }
        RatMatrix out(rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t bi = 0; bi < ms.size(); ++bi) {
                const long m1 = ms[bi];
                const std::size_t n = static_cast<std::size_t>((m1 - 1) / 2);
                auto parts = partial_closed(n, rows[i]);
                for (const auto& [t, c] : parts) {
                    if (r == 2) {
                        out(i, block_off[bi]) = c;
                    } else {
                        out(i, block_off[bi] + tuple_index(W - m1, r - 1, t)) = c;
                    }
                }
            }
        }
        return out;
    }

private:
    // Shared circle-action loop: dbar over several targets at once.
    static std::vector<NcPoly> dbar_batch(std::size_t n, const std::vector<NcPoly>& targets,
                                          long W, int r) {
        const long out_w = W - static_cast<long>(2 * n) - 1;
        const int out_d = r - 1;
        std::vector<NcPoly> out(targets.size());
        if (out_w < 0 || out_d < 0 || out_d > out_w) return out;
        const SigmaGenerator sg = sigma_bar(n);
        for (const Word& y : all_words(static_cast<std::size_t>(out_w),
                                       static_cast<std::size_t>(out_d))) {
            NcPoly image = circ(sg.body, y);
            for (std::size_t i = 0; i < targets.size(); ++i) {
                Rational c(0);
                for (const auto& [w, cw] : image.terms()) {
                    Rational tc = coeff(targets[i], w);
                    if (tc != 0) c += cw * tc;
                }
                if (c != 0) out[i].add_term(y, c);
            }
        }
        return out;
    }

    std::map<std::pair<long, int>, std::vector<IndexTuple>> tuples_;
    std::map<std::pair<long, int>, RatMatrix> E_;
    std::map<std::pair<long, int>, RatMatrix> Einv_;
};

// Brute-force single-row derivation coordinates; the closed-form route is
// partial_closed above, and the two must agree wherever both apply.
inline std::map<IndexTuple, Rational> partial_brute(std::size_t n, const IndexTuple& t,
                                                    GrBasis& cache) {
    const long W = tuple_weight(t) - static_cast<long>(2 * n) - 1;
    const int r = static_cast<int>(t.size());
    if (r < 2) throw std::invalid_argument("partial_brute needs depth >= 2");
    NcPoly img = dbar(n, sum_odd_word(t), tuple_weight(t), r);
    std::map<IndexTuple, Rational> out;
    if (r == 2) {
        Rational c = gr1_coordinate(img, W);
        if (c != 0) out[{W}] = c;
        return out;
    }
    auto cs = cache.coordinates(img, W, r - 1);
    const auto& ts = cache.tuples(W, r - 1);
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (cs[i] != 0) out[ts[i]] = cs[i];
    return out;
}

// ---------------------------------------------------------------------------
// Depth-two matrices: E (all-odd rows), F (all-even rows), the diagonal B,
// and Mtilde = E B^{-1} whose interior block has closed-form binomial
// entries.
// ---------------------------------------------------------------------------

inline std::vector<IndexTuple> depth2_odd_rows(long N) {
    std::vector<IndexTuple> rows;
    for (long k = 1; k <= N - 1; k += 2) rows.push_back({k, N - k});
    return rows;
}

inline std::vector<IndexTuple> depth2_even_rows(long N) {
    std::vector<IndexTuple> rows;
    for (long k = 2; k <= N - 2; k += 2) rows.push_back({k, N - k});
    return rows;
}

inline RatMatrix depth2_E(long N, GrBasis& cache) {
    if (N < 2 || N % 2) throw std::invalid_argument("depth2_E needs even N >= 2");
    return cache.basis_matrix(N, 2);
}

inline RatMatrix depth2_F(long N, GrBasis& cache) {
    if (N < 4 || N % 2) throw std::invalid_argument("depth2_F needs even N >= 4");
    return cache.partial_matrix_brute(N, 2, depth2_even_rows(N));
}

// B = diag over columns m1 = 1, 3, ..., N-1 of the depth-one reduction
// factors picked up by the derivation (s = N - m1 - 1):
//   m1 = 1:        (1-2^{N-1}) / (2-2^{N-1})
//   1 < m1 < N-1:  (2^{s+1}-1) / (4(2^s-1))
//   m1 = N-1:      -(2^{N-1}-1) / 4
inline RatMatrix depth2_B(long N) {
    if (N < 4 || N % 2) throw std::invalid_argument("depth2_B needs even N >= 4");
    const std::size_t d = static_cast<std::size_t>(N / 2);
    RatMatrix b(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const long m1 = 2 * static_cast<long>(j) + 1;
        const long s = N - m1 - 1;
        if (m1 == 1) {
            b(j, j) = (Rational(1) - pow2q(N - 1)) / (Rational(2) - pow2q(N - 1));
        } else if (m1 == N - 1) {
            b(j, j) = -(pow2q(N - 1) - 1) / 4;
        } else {
            b(j, j) = (pow2q(s + 1) - 1) / (4 * (pow2q(s) - 1));
        }
    }
    return b;
}

inline RatMatrix depth2_Mtilde(long N, GrBasis& cache) {
    return depth2_E(N, cache) * inverse(depth2_B(N));
}

// Closed-form entry of the interior block M of Mtilde,
// 1 <= i, j <= N/2 - 2:  a_{i,j} = C(2j,2i) - C(2j,N-2-2i) + delta(2i,2j)(1-2^{2j+1}).
inline Rational mtilde_interior_formula(long N, long i, long j) {
    Rational a = binom_q(2 * j, 2 * i) - binom_q(2 * j, N - 2 - 2 * i);
    if (i == j) a += Rational(1) - pow2q(2 * j + 1);
    return a;
}

// M written as D + A: D = diag(1 - 2^{2i+1}), A the binomial part.
inline RatMatrix depth2_M_formula(long N) {
    if (N < 8 || N % 2) throw std::invalid_argument("interior block needs even N >= 8");
    const std::size_t d = static_cast<std::size_t>(N / 2 - 2);
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            m(i, j) = mtilde_interior_formula(N, static_cast<long>(i) + 1,
                                              static_cast<long>(j) + 1);
    return m;
}

inline RatMatrix depth2_FEinv(long N, GrBasis& cache) {
    return depth2_F(N, cache) * inverse(depth2_E(N, cache));
}

}  // namespace mdz
