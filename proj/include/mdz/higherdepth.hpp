#pragma once

#include <mdz/parallel.hpp>
#include <mdz/sumodd.hpp>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mdz {

// T_{N,r} in lexicographic order.
inline std::vector<IndexTuple> t_index(long N, int r) { return odd_compositions(N, r); }

// Closed-form entry of the derivation matrix on the all-odd sum-odd basis:
// row k is the differentiated tuple, column n = (n1; n2..nr) the target.
// The merge condition compares the full merged tuple against (n2..nr); the
// partial comparison in print is equivalent by weight conservation.
inline Rational e_entry(const IndexTuple& k, const IndexTuple& n) {
    const int r = static_cast<int>(k.size());
    if (r < 2 || n.size() != k.size())
        throw std::invalid_argument("e_entry needs tuples of equal depth >= 2");
    if (!tuple_all_odd(k) || !tuple_all_odd(n) || tuple_weight(k) != tuple_weight(n))
        throw std::invalid_argument("e_entry needs all-odd tuples of equal weight");
    const long n1 = n[0];
    Rational e(0);
    if (n1 == 1) {
        if (k == n) e -= 1;
        bool tail = k[static_cast<std::size_t>(r - 1)] == 1;
        for (int i = 0; tail && i + 1 < r; ++i) tail = (k[i] == n[i + 1]);
        if (tail) e += rat(1, 2);
        return e;
    }
    if (k == n) e += pow2q(n1 - 1) - rat(1, 2);
    for (int i = 0; i + 1 < r; ++i) {
        const long merged = k[i] + k[i + 1] - n1;
        if (merged < 1) continue;
        bool match = true;
        for (int p = 0; match && p < i; ++p) match = (k[p] == n[p + 1]);
        match = match && (merged == n[i + 1]);
        for (int p = i + 2; match && p < r; ++p) match = (k[p] == n[p]);
        if (match) e += (binom_q(n1 - 1, k[i + 1] - 1) - binom_q(n1 - 1, k[i] - 1)) / 2;
    }
    return e;
}

// Square closed-form matrix over T_{N,r}.
struct ETan {
    long N = 0;
    int r = 0;
    std::vector<IndexTuple> index;  // row and column labels, lexicographic
    RatMatrix matrix;
};

inline ETan build_E(long N, int r) {
    ETan e;
    e.N = N;
    e.r = r;
    e.index = t_index(N, r);
    const std::size_t d = e.index.size();
    e.matrix = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) e.matrix(i, j) = e_entry(e.index[i], e.index[j]);
    return e;
}

// Column dominance data for one column of E.
struct ColumnDominance {
    IndexTuple label;
    Rational diag_abs;
    Rational offdiag_sum;
    bool dominant = false;
};

inline std::vector<ColumnDominance> column_dominance(const ETan& e) {
    std::vector<ColumnDominance> out;
    const std::size_t d = e.index.size();
    for (std::size_t j = 0; j < d; ++j) {
        ColumnDominance cd;
        cd.label = e.index[j];
        cd.diag_abs = rat_abs(e.matrix(j, j));
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) cd.offdiag_sum += rat_abs(e.matrix(i, j));
        cd.dominant = cd.diag_abs > cd.offdiag_sum;
        out.push_back(std::move(cd));
    }
    return out;
}

// Depth-3 verification: invertibility and column dominance of E, and the
// structural zero of P Q^{-1} on the coordinate of the lexicographically
// last basis tuple (N-2, 1, 1).
struct Depth3Report {
    long N = 0;
    std::size_t order = 0;
    bool invertible = false;
    bool all_columns_dominant = false;
    bool p_last_column_zero = false;
    bool q_last_column_structure = false;  // (0, ..., 0, 2^{N-3} - 1/2)^T
    bool pq_inv_last_column_zero = false;
    std::size_t mixed_rows = 0;
    std::size_t zero_rows = 0;  // mixed tuples whose class vanishes entirely
    bool pass() const {
        return invertible && all_columns_dominant && p_last_column_zero &&
               q_last_column_structure && pq_inv_last_column_zero;
    }
};

inline Depth3Report verify_depth3(long N, GrBasis& cache) {
    if (N < 5 || N % 2 == 0) throw std::invalid_argument("verify_depth3 needs odd N >= 5");
    Depth3Report rep;
    rep.N = N;
    ETan E = build_E(N, 3);
    rep.order = E.index.size();
    rep.invertible = rank(E.matrix) == rep.order;

    rep.all_columns_dominant = true;
    for (const auto& cd : column_dominance(E))
        if (!cd.dominant) rep.all_columns_dominant = false;

    // mixed-parity rows, coordinates over the same column basis as E
    std::vector<IndexTuple> mixed;
    for (const auto& t : all_compositions(N, 3))
        if (!tuple_all_odd(t)) mixed.push_back(t);
    rep.mixed_rows = mixed.size();
    RatMatrix P = cache.partial_matrix_brute(N, 3, mixed);

    const std::size_t last = E.index.size() - 1;
    rep.p_last_column_zero = true;
    for (std::size_t i = 0; i < P.rows(); ++i)
        if (P(i, last) != 0) rep.p_last_column_zero = false;

    rep.q_last_column_structure = true;
    for (std::size_t i = 0; i + 1 < E.index.size(); ++i)
        if (E.matrix(i, last) != 0) rep.q_last_column_structure = false;
    if (E.matrix(last, last) != pow2q(N - 3) - rat(1, 2)) rep.q_last_column_structure = false;

    if (rep.invertible) {
        RatMatrix PQ = P * inverse(E.matrix);
        rep.pq_inv_last_column_zero = true;
        for (std::size_t i = 0; i < PQ.rows(); ++i)
            if (PQ(i, last) != 0) rep.pq_inv_last_column_zero = false;
        for (std::size_t i = 0; i < PQ.rows(); ++i) {
            bool all_zero = true;
            for (std::size_t j = 0; j < PQ.cols(); ++j)
                if (PQ(i, j) != 0) all_zero = false;
            if (all_zero) ++rep.zero_rows;
        }
    }
    return rep;
}

// Conjecture scan: invertibility of the closed-form E over a weight range.
// A singular instance is a finding, not a failure; it is dumped in full.
struct ScanFinding {
    int r = 0;
    long N = 0;
    std::size_t order = 0;
    std::size_t rank = 0;
    bool invertible = false;
    long millis = 0;
    std::string singular_dump;  // CSV of E plus a kernel vector when singular
};

struct ScanReport {
    int r = 0;
    long n_max = 0;
    std::size_t order_cap = 0;
    std::vector<ScanFinding> findings;
    std::optional<long> stopped_at;  // first weight over the order cap
};

inline ScanReport scan_conjecture(int r, long n_max, std::size_t order_cap, int jobs = 1) {
    if (r < 3) throw std::invalid_argument("scan_conjecture needs depth >= 3");
    ScanReport rep;
    rep.r = r;
    rep.n_max = n_max;
    rep.order_cap = order_cap;
    std::vector<long> weights;
    for (long N = r + 2; N <= n_max; N += 2) {
        std::size_t order = t_index(N, r).size();
        if (order > order_cap) {
            rep.stopped_at = N;
            break;
        }
        weights.push_back(N);
    }
    rep.findings = parallel_map<ScanFinding>(weights.size(), jobs, [&](std::size_t i) {
        const long N = weights[i];
        auto t0 = std::chrono::steady_clock::now();
        ETan E = build_E(N, r);
        ScanFinding f;
        f.r = r;
        f.N = N;
        f.order = E.index.size();
        f.rank = rank(E.matrix);
        f.invertible = f.rank == f.order;
        if (!f.invertible) {
            std::ostringstream os;
            os << E.matrix.to_csv();
            auto kb = kernel_basis(E.matrix);
            if (!kb.empty()) {
                os << "kernel:";
                for (const auto& v : kb[0]) os << ' ' << rat_str(v);
                os << '\n';
            }
            f.singular_dump = os.str();
        }
        auto t1 = std::chrono::steady_clock::now();
        f.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return f;
    });
    return rep;
}

}  // namespace mdz
